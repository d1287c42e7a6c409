#ifndef ISG_INVERSE_SEMIGROUP_HPP_
#define ISG_INVERSE_SEMIGROUP_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isg/index_set.hpp"

namespace isg {

// Everything downstream enumerates structures that are exponential in n,
// so table-based input is capped at desk scale.
inline constexpr int kMaxElements = 256;

// A finite inverse semigroup with zero, over dense element indices 0..n-1.
// The zero element is always index 0 (validation relabels if necessary).
// Values are immutable after construction and safe to share across threads.
class InverseSemigroup {
 public:
  InverseSemigroup() = default;

  // Unchecked constructor; validate_inverse_semigroup is the checked path.
  InverseSemigroup(int n, std::vector<int> table, std::vector<int> inv,
                   std::vector<std::string> labels = {});

  int size() const { return n_; }
  int zero() const { return 0; }

  int product(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inverse(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  bool is_idempotent(int a) const { return product(a, a) == a; }

  // Natural partial order: a <= b iff a = (a a^-1) b.
  bool leq(int a, int b) const { return a == product(product(a, inverse(a)), b); }

  const std::vector<int>& table() const { return table_; }
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

struct ValidationReport {
  bool ok = false;
  bool zero_missing = false;
  std::vector<std::string> violations;
};

struct ValidationResult {
  ValidationReport report;
  std::optional<InverseSemigroup> semigroup;  // present iff report.ok
  std::vector<int> relabeling;                // old index -> new index
};

// Checks the inverse-semigroup-with-zero axioms on a raw multiplication
// table and, on success, returns the semigroup with the zero relabeled to
// index 0. Axiom violations are report content; structural problems
// (non-square table, out-of-range entries, n > cap) throw.
ValidationResult validate_inverse_semigroup(int n, std::span<const int> table,
                                            std::vector<std::string> labels = {});

// Standard example families.
InverseSemigroup brandt(int k);             // k x k matrix units plus zero
InverseSemigroup symmetric_inverse(int k);  // all partial injections on k points
InverseSemigroup chain(int k);              // the (k+1)-chain 0 < x1 < ... < xk under meet

// Builds the meet-semilattice semigroup from a partial order given as a
// row-major boolean matrix leq[a*n+b] = (a <= b). Throws MeetMissing when
// some pair has no greatest lower bound or there is no bottom element.
InverseSemigroup meet_semilattice(int n, const std::vector<std::uint8_t>& leq);

// Returns the index of an absorbing element, or -1 if none exists.
int find_zero(int n, std::span<const int> table);

// Appends an absorbing element to a table that lacks one; returns the input
// unchanged when an absorbing element is already present.
std::vector<int> adjoin_zero_table(int n, std::span<const int> table);

// No-op on validated semigroups (the zero is guaranteed); kept for symmetry
// with adjoin_zero_table.
InverseSemigroup adjoin_zero(const InverseSemigroup& S);

struct OrderRelation {
  int n = 0;
  std::vector<std::uint8_t> leq;           // row-major n x n
  std::vector<std::pair<int, int>> hasse;  // covering pairs (lower, upper)

  bool less_eq(int a, int b) const { return leq[static_cast<std::size_t>(a) * n + b] != 0; }
};

OrderRelation order_relation(const InverseSemigroup& S);

// The idempotents E of S, with E materialized as a standalone semilattice
// (an inverse semigroup with zero in its own right) so that the filter
// machinery applies to it unchanged. E-index i corresponds to S-index
// elements[i]; elements is sorted ascending, so E-index 0 is the zero.
struct IdempotentSet {
  IndexSet members;                // subset of S
  std::vector<int> elements;       // E-index -> S-index, ascending
  std::vector<int> index_in_e;     // S-index -> E-index, or -1
  InverseSemigroup semilattice;    // the meet table of E over E-indices

  int size() const { return static_cast<int>(elements.size()); }
  int to_s(int e_index) const { return elements[static_cast<std::size_t>(e_index)]; }
  int from_s(int s_index) const { return index_in_e[static_cast<std::size_t>(s_index)]; }
};

IdempotentSet idempotents(const InverseSemigroup& S);

struct SubsemigroupResult {
  InverseSemigroup sub;
  std::vector<int> embedding;  // sub index -> ambient index
};

// Smallest subset of S containing gens and the zero that is closed under
// product and inversion, returned as a standalone semigroup with the index
// embedding back into S.
SubsemigroupResult inverse_closure_subsemigroup(const InverseSemigroup& S, const IndexSet& gens);

}  // namespace isg

#endif  // ISG_INVERSE_SEMIGROUP_HPP_
