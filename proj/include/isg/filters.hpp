#ifndef ISG_FILTERS_HPP_
#define ISG_FILTERS_HPP_

#include <vector>

#include "isg/index_set.hpp"
#include "isg/inverse_semigroup.hpp"

namespace isg {

// A filter is a nonempty down-directed up-set; carriers are IndexSets over
// the ambient semigroup's element indices. E-filters are carriers over
// E-indices of an IdempotentSet (its semilattice viewed as an inverse
// semigroup with zero).

inline constexpr int kBruteforceCap = 20;

IndexSet up_closure(const InverseSemigroup& S, const IndexSet& A);
IndexSet down_closure(const InverseSemigroup& S, const IndexSet& A);
IndexSet principal_filter(const InverseSemigroup& S, int a);  // up-closure of {a}

bool is_filter_set(const InverseSemigroup& S, const IndexSet& A);

struct FilterClassification {
  bool is_filter = false;
  bool is_proper = false;      // filter and zero not contained
  bool is_ultra = false;       // maximal among proper filters
  bool is_idempotent = false;  // meets E
};

FilterClassification classify_subset(const InverseSemigroup& S, const IndexSet& A);

enum class EnumerationMode { principal, bruteforce };
enum class FilterSelect { all, proper, ultra, idempotent };

// Enumerates filters of S. Principal mode walks {up(a) : a in S}; bruteforce
// mode tests all 2^n subsets (n <= cap, else TooLarge) and is the oracle the
// principal mode is validated against. select=idempotent means proper and
// idempotent. Output is sorted canonically (IndexSet order, which refines
// "by minimum element index").
std::vector<IndexSet> enumerate_filters(const InverseSemigroup& S, EnumerationMode mode,
                                        FilterSelect select, int bruteforce_cap = kBruteforceCap);

enum class EFilterSelect { proper, ultra };

// Proper E-filters / E-ultrafilters, as carriers over E-indices.
std::vector<IndexSet> efilters(const InverseSemigroup& S, const IdempotentSet& E,
                               EFilterSelect select);

// The unit-space correspondence: an idempotent proper filter F goes to
// F n E (reindexed to E), a proper E-filter comes back as its up-closure in
// S. Throws NotProper / NotIdempotentFilter outside the domain.
IndexSet efilter_of_filter(const InverseSemigroup& S, const IdempotentSet& E, const IndexSet& F);
IndexSet filter_of_efilter(const InverseSemigroup& S, const IdempotentSet& E, const IndexSet& xi);

// Carrier lift: an E-indexed subset as an S-indexed subset.
IndexSet efilter_to_s(const InverseSemigroup& S, const IdempotentSet& E, const IndexSet& xi);

}  // namespace isg

#endif  // ISG_FILTERS_HPP_
