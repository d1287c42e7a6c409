#ifndef ISG_TOPOLOGY_HPP_
#define ISG_TOPOLOGY_HPP_

#include <string>
#include <vector>

#include "isg/filters.hpp"
#include "isg/index_set.hpp"
#include "isg/inverse_semigroup.hpp"

namespace isg {

inline constexpr int kMaxTopologyPoints = 1 << 14;
// Explicit materialization of the open-set family walks all 2^p subsets, so
// it is gated separately from the point cap (patch topologies on filters are
// discrete at finite scale, so the family has 2^p members).
inline constexpr int kDefaultMaterializePoints = 16;

struct BasisReport {
  bool covers_all_points = true;
  bool intersections_ok = true;
  std::vector<std::string> notes;

  bool valid() const { return covers_all_points && intersections_ok; }
};

struct HausdorffResult {
  bool hausdorff = true;
  int witness_a = -1;  // inseparable pair when not Hausdorff
  int witness_b = -1;
};

// A topology on points 0..p-1 generated by a basis. Internally the space is
// stored as the minimal open neighborhood N(x) of every point (the
// intersection of all generating sets containing x, which is open since the
// generated family is closed under finite intersections). A set O is open
// iff N(x) is contained in O for every x in O; every query below runs
// exactly off this table, and the full open family can additionally be
// materialized under a size cap.
class FiniteTopology {
 public:
  FiniteTopology() = default;
  FiniteTopology(int num_points, std::vector<IndexSet> basis);

  int num_points() const { return num_points_; }
  const std::vector<IndexSet>& basis() const { return basis_; }
  const IndexSet& min_nbhd(int x) const { return min_nbhd_[static_cast<std::size_t>(x)]; }

  bool is_open(const IndexSet& A) const;
  IndexSet closure(const IndexSet& A) const;
  HausdorffResult hausdorff_check() const;

  // Whether the generating family satisfies the basis criterion (covers the
  // points; pairwise intersections are unions of members). Generation
  // proceeds regardless; this is diagnostic.
  BasisReport check_basis_validity() const;

  // All open sets, sorted canonically. Throws TooLarge beyond the cap.
  std::vector<IndexSet> materialize_opens(int max_points = kDefaultMaterializePoints) const;

 private:
  int num_points_ = 0;
  std::vector<IndexSet> basis_;     // deduplicated, sorted
  std::vector<IndexSet> min_nbhd_;  // per point
};

FiniteTopology generate_topology(int num_points, std::vector<IndexSet> basis);

// Topologies on a common point set are equal iff their minimal
// neighborhoods agree everywhere; *witness receives a differing point.
bool same_topology(const FiniteTopology& a, const FiniteTopology& b, int* witness = nullptr);

struct MapTopologyReport {
  bool continuous = true;
  bool open = true;
  std::string witness;
};

// Continuity and openness of a total point map f, decided via minimal
// neighborhoods: f is continuous iff f(N(x)) lies in N(f(x)) for all x, and
// open iff f(N(x)) is open for all x.
MapTopologyReport check_map_topology(const FiniteTopology& src, const FiniteTopology& dst,
                                     const std::vector<int>& f);

// Same verdicts computed by quantifying over the fully materialized open
// families (preimage of every open is open / image of every open is open).
MapTopologyReport check_map_topology_materialized(const FiniteTopology& src,
                                                  const FiniteTopology& dst,
                                                  const std::vector<int>& f,
                                                  int max_points = kDefaultMaterializePoints);

IndexSet image_of(const std::vector<int>& f, const IndexSet& A, int dst_points);
IndexSet preimage_of(const std::vector<int>& f, const IndexSet& B);

// Reindexes a subset of a larger universe onto the subspace whose points are
// listed (in order) in `points`.
IndexSet reindex_subset(const IndexSet& A, const std::vector<int>& points);

// The patch basis on a list of E-filters: one set {xi : e in xi, xi avoids X}
// per idempotent e and X within the down-set of e. Sets are returned as
// subsets of the given point list, deduplicated.
std::vector<IndexSet> efilter_patch_basis(const IdempotentSet& E,
                                          const std::vector<IndexSet>& efilter_points);

struct TightEFilters {
  std::vector<IndexSet> tight;  // carriers over E-indices, sorted
  bool equals_ultra = false;    // compactability verdict
};

// The closure of the E-ultrafilters inside the patch topology on proper
// E-filters, together with the compactability verdict (tight = ultra).
TightEFilters tight_efilters(const InverseSemigroup& S, const IdempotentSet& E);

}  // namespace isg

#endif  // ISG_TOPOLOGY_HPP_
