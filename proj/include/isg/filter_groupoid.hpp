#ifndef ISG_FILTER_GROUPOID_HPP_
#define ISG_FILTER_GROUPOID_HPP_

#include <map>
#include <string>
#include <vector>

#include "isg/filters.hpp"
#include "isg/groupoid.hpp"
#include "isg/index_set.hpp"
#include "isg/inverse_semigroup.hpp"

namespace isg {

// The inverse-semigroup product on filters, F.G = up(FG). Defined for all
// pairs; the groupoid composition below is its restriction to composable
// pairs (d(F) = r(G)).
IndexSet compose_filters(const InverseSemigroup& S, const IndexSet& F, const IndexSet& G);

IndexSet filter_inverse(const InverseSemigroup& S, const IndexSet& F);
IndexSet filter_d(const InverseSemigroup& S, const IndexSet& F);  // F^-1 . F
IndexSet filter_r(const InverseSemigroup& S, const IndexSet& F);  // F . F^-1
bool filters_composable(const InverseSemigroup& S, const IndexSet& F, const IndexSet& G);

// source_efilter(F) = d(F) n E, as an E-filter.
IndexSet source_efilter(const InverseSemigroup& S, const IdempotentSet& E, const IndexSet& F);

enum class FilterKind { proper, ultra, tight };

struct FilterGroupoid {
  FilterKind kind = FilterKind::proper;
  FiniteGroupoid g;
  std::vector<IndexSet> filter;        // arrow -> carrier
  std::vector<bool> ultra;             // per arrow
  std::vector<bool> tight;             // per arrow (source and range E-filters tight)
  std::map<IndexSet, int> arrow_index; // carrier -> arrow

  int arrow_of(const IndexSet& carrier) const {
    auto it = arrow_index.find(carrier);
    return it == arrow_index.end() ? -1 : it->second;
  }
  IndexSet ultra_arrows() const;
  IndexSet tight_arrows() const;
};

// Arrows are the proper filters (restricted per kind: ultrafilters, or
// filters whose source and range E-filters are tight), composition defined
// exactly on composable pairs.
FilterGroupoid build_filter_groupoid(const InverseSemigroup& S, const IdempotentSet& E,
                                     FilterKind kind);

enum class BasicKind { principal, patch, ultra };

struct BasicSet {
  BasicKind kind = BasicKind::principal;
  int s = -1;
  IndexSet avoid;    // patch only: the finite set T within down(s)
  IndexSet members;  // arrow subset
};

// F_s = {F : s in F}; F_{s:T} = {F : s in F, F avoids T} (requires T within
// down(s), else BadPatchSet); U_s = F_s restricted to ultrafilter arrows.
BasicSet basic_set(const InverseSemigroup& S, const FilterGroupoid& FG, BasicKind kind, int s,
                   const IndexSet* T = nullptr);

// All principal sets {F_s : s in S}, indexed by s.
std::vector<IndexSet> principal_basis(const InverseSemigroup& S, const FilterGroupoid& FG);

// All patch sets {F_{s:T} : s in S, T within down(s)}, deduplicated.
// Exponential in the largest down-set; capped.
std::vector<IndexSet> patch_basis(const InverseSemigroup& S, const FilterGroupoid& FG);

struct NamedCheck {
  std::string name;
  bool ok = true;
  std::string witness;
  long cases = 0;
};

// Exhaustive law checks on the proper-filter groupoid:
// recovery    F = up(s d(F)) for all proper F and s in F;
// separation  filters that meet and share a source are equal.
std::vector<NamedCheck> check_filter_laws(const InverseSemigroup& S, const IdempotentSet& E);
std::vector<NamedCheck> check_filter_laws(const InverseSemigroup& S, const IdempotentSet& E,
                                          const FilterGroupoid& FG);

// Laws of the principal basic sets F_s = {F : s in F}:
// inverse     the arrowwise inverse of F_s is F_{s^-1};
// product     the pointwise composition F_s F_t is F_{st};
// bisection   every F_s is a local bisection (source and range agree);
// source      the sources of F_s form F_{s^-1 s};
// etale-basis the family {F_s} is an etale basis.
std::vector<NamedCheck> check_principal_set_laws(const InverseSemigroup& S,
                                                 const IdempotentSet& E);
std::vector<NamedCheck> check_principal_set_laws(const InverseSemigroup& S,
                                                 const IdempotentSet& E,
                                                 const FilterGroupoid& FG);

}  // namespace isg

#endif  // ISG_FILTER_GROUPOID_HPP_
