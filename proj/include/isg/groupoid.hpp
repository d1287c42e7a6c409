#ifndef ISG_GROUPOID_HPP_
#define ISG_GROUPOID_HPP_

#include <string>
#include <vector>

#include "isg/index_set.hpp"

namespace isg {

// A finite groupoid as plain data: arrows are opaque ids 0..num_arrows-1,
// composition is an explicit partial map (-1 = not composable), inversion a
// total map. Payloads (filters, germs) live in the concrete constructions;
// labels are carried here for reporting. The checkers below quantify over
// the stored tables and never assume the axioms hold.
struct FiniteGroupoid {
  int num_arrows = 0;
  std::vector<int> inv;       // arrow -> arrow
  std::vector<int> compose;   // row-major num_arrows x num_arrows, -1 = undefined
  std::vector<std::string> labels;

  bool composable(int a, int b) const {
    return compose[static_cast<std::size_t>(a) * num_arrows + b] >= 0;
  }
  int product(int a, int b) const {
    return compose[static_cast<std::size_t>(a) * num_arrows + b];
  }
  void set_product(int a, int b, int c) {
    compose[static_cast<std::size_t>(a) * num_arrows + b] = c;
  }
  int inverse(int a) const { return inv[static_cast<std::size_t>(a)]; }

  // d(g) = g^-1 g and r(g) = g g^-1; -1 on tampered tables.
  int source(int a) const { return product(inverse(a), a); }
  int range(int a) const { return product(a, inverse(a)); }

  IndexSet unit_set() const;          // {d(g)} over all g, ignoring -1
  std::vector<int> units() const;     // sorted
  const std::string& label(int a) const { return labels[static_cast<std::size_t>(a)]; }
};

struct CheckResult {
  bool ok = true;
  std::string witness;  // first violation, human-readable
};

// The three groupoid axioms: (i) double inverse and (g^-1, g) composable,
// (ii) associativity with composability propagation, (iii) the cancellation
// laws g^-1 g h = h and g h h^-1 = g. Reports the first violation.
CheckResult check_axioms(const FiniteGroupoid& G);

struct BisectionCheck {
  bool source_injective = true;
  bool range_injective = true;
};

BisectionCheck local_bisection_check(const FiniteGroupoid& G, const IndexSet& A);

// True iff the source map restricted to A is injective. The range-side
// answer is available from local_bisection_check; the two agree on the sets
// the constructions produce but not on arbitrary subsets.
bool is_local_bisection(const FiniteGroupoid& G, const IndexSet& A);

// Etale basis test: for all O, N in B, the inverse set O^-1 and the
// pointwise composition ON are members of B, and O^-1 O lands in the units.
CheckResult is_etale_basis(const FiniteGroupoid& G, const std::vector<IndexSet>& B);

// Bijectivity, composability preservation in both directions, and the
// homomorphism law, for a total arrow map phi : G -> H.
CheckResult check_isomorphism(const FiniteGroupoid& G, const FiniteGroupoid& H,
                              const std::vector<int>& phi);

bool is_subgroupoid(const FiniteGroupoid& G, const IndexSet& H);

// Pointwise operations on arrow subsets.
IndexSet arrow_set_inverse(const FiniteGroupoid& G, const IndexSet& A);
IndexSet arrow_set_compose(const FiniteGroupoid& G, const IndexSet& A, const IndexSet& B);

// The pair groupoid on k objects: arrows (i,j) with (i,j)(j,l) = (i,l).
FiniteGroupoid pair_groupoid(int k);

}  // namespace isg

#endif  // ISG_GROUPOID_HPP_
