#ifndef ISG_GERM_GROUPOID_HPP_
#define ISG_GERM_GROUPOID_HPP_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "isg/filters.hpp"
#include "isg/groupoid.hpp"
#include "isg/index_set.hpp"
#include "isg/inverse_semigroup.hpp"

namespace isg {

// A point (s, xi) of the germ construction: an element together with a
// proper E-filter containing s^-1 s. Carriers are E-indexed.
struct GermPoint {
  int element = -1;
  IndexSet carrier;

  bool operator==(const GermPoint&) const = default;
  bool operator<(const GermPoint& o) const {
    if (element != o.element) {
      return element < o.element;
    }
    return carrier < o.carrier;
  }
};

bool is_germ_point(const InverseSemigroup& S, const IdempotentSet& E, const GermPoint& p);

// The standard action of s on an E-filter: {f in E : s e s^-1 <= f for some
// e in xi}. Throws DomainError when s^-1 s is not in xi.
IndexSet act_on_efilter(const InverseSemigroup& S, const IdempotentSet& E, int s,
                        const IndexSet& xi);

// Germ equivalence: equal carriers and se = te for some e in the carrier.
// Points that fail the domain condition are equivalent to nothing.
bool germ_equiv(const InverseSemigroup& S, const IdempotentSet& E, const GermPoint& p,
                const GermPoint& q);

enum class GermKind { proper, tight, ultra };

struct GermGroupoid {
  GermKind kind = GermKind::proper;
  FiniteGroupoid g;
  std::vector<IndexSet> universe;               // the E-filters acted on, sorted
  std::vector<GermPoint> canonical;             // arrow -> lexicographic-minimum representative
  std::vector<std::vector<GermPoint>> members;  // arrow -> whole class, sorted
  std::map<GermPoint, int> point_arrow;         // every point of Lambda -> its class
  // When an equivalence flip was injected, the affected pair.
  std::optional<std::pair<GermPoint, GermPoint>> injected_flip;

  int arrow_of(const GermPoint& p) const {
    auto it = point_arrow.find(p);
    return it == point_arrow.end() ? -1 : it->second;
  }
  int universe_index(const IndexSet& xi) const;
};

// Builds the groupoid of germs over the proper E-filters (kind proper), the
// tight E-filters, or the E-ultrafilters. Classes are materialized in full.
// With inject_equiv_flip set, the equivalence verdict of the first pair of
// distinct same-carrier points is inverted before partitioning (fault
// injection for mutation tests); the construction does not self-check, the
// verification layer does.
GermGroupoid build_germ_groupoid(const InverseSemigroup& S, const IdempotentSet& E, GermKind kind,
                                 bool inject_equiv_flip = false);

// Arrow-level germ operations: the inverse of [s, xi] is [s^-1, s.xi] and
// the composition [s, t.eta][t, eta] is [st, eta], writing s.xi for the
// action image. compose_germs throws NotComposable when the carriers do not
// match up. Representative-independence of both is asserted by the
// verification layer.
int invert_germ(const GermGroupoid& GG, int arrow);
int compose_germs(const InverseSemigroup& S, const IdempotentSet& E, const GermGroupoid& GG,
                  int left, int right);

// The germs [s, xi] with xi drawn from A, a subset of the groupoid's
// universe indices. Every xi in A must contain s^-1 s (BadBase).
IndexSet germs_over(const InverseSemigroup& S, const IdempotentSet& E, const GermGroupoid& GG,
                    int s, const IndexSet& A);

// The sets {xi in universe : e in xi}, the domains the germ sets live over.
IndexSet universe_with_idempotent(const GermGroupoid& GG, int e_index);

}  // namespace isg

#endif  // ISG_GERM_GROUPOID_HPP_
