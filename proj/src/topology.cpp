#include "isg/topology.hpp"

#include <algorithm>
#include <map>

#include "isg/errors.hpp"

namespace isg {

FiniteTopology::FiniteTopology(int num_points, std::vector<IndexSet> basis)
    : num_points_(num_points) {
  if (num_points > kMaxTopologyPoints) {
    throw TooLarge("topology capped at " + std::to_string(kMaxTopologyPoints) +
                   " points, got " + std::to_string(num_points));
  }
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  basis_ = std::move(basis);
  for (const auto& b : basis_) {
    if (b.universe() != num_points_) {
      throw DomainError("basis set universe does not match the point count");
    }
  }
  min_nbhd_.assign(static_cast<std::size_t>(num_points_), IndexSet::full(num_points_));
  for (const auto& b : basis_) {
    b.for_each([&](int x) { min_nbhd_[static_cast<std::size_t>(x)] &= b; });
  }
}

FiniteTopology generate_topology(int num_points, std::vector<IndexSet> basis) {
  return FiniteTopology(num_points, std::move(basis));
}

bool FiniteTopology::is_open(const IndexSet& A) const {
  bool open = true;
  A.for_each([&](int x) {
    if (!min_nbhd_[static_cast<std::size_t>(x)].is_subset_of(A)) {
      open = false;
    }
  });
  return open;
}

IndexSet FiniteTopology::closure(const IndexSet& A) const {
  // x is in the closure iff every open around x meets A, i.e. iff the
  // minimal neighborhood of x meets A.
  IndexSet out(num_points_);
  for (int x = 0; x < num_points_; ++x) {
    if (min_nbhd_[static_cast<std::size_t>(x)].intersects(A)) {
      out.insert(x);
    }
  }
  return out;
}

HausdorffResult FiniteTopology::hausdorff_check() const {
  for (int x = 0; x < num_points_; ++x) {
    for (int y = x + 1; y < num_points_; ++y) {
      if (min_nbhd_[static_cast<std::size_t>(x)].intersects(min_nbhd_[static_cast<std::size_t>(y)])) {
        return {false, x, y};
      }
    }
  }
  return {};
}

BasisReport FiniteTopology::check_basis_validity() const {
  BasisReport report;
  IndexSet covered(num_points_);
  for (const auto& b : basis_) {
    covered |= b;
  }
  if (!(covered == IndexSet::full(num_points_))) {
    report.covers_all_points = false;
    report.notes.push_back("point " + std::to_string((IndexSet::full(num_points_) - covered).min()) +
                           " lies in no basis set");
  }
  // Pairwise intersections must be unions of members: around every point of
  // an intersection there must be a member inside it.
  for (std::size_t i = 0; i < basis_.size() && report.intersections_ok; ++i) {
    for (std::size_t j = i + 1; j < basis_.size() && report.intersections_ok; ++j) {
      IndexSet meet = basis_[i] & basis_[j];
      meet.for_each([&](int x) {
        if (!report.intersections_ok) {
          return;
        }
        bool found = false;
        for (const auto& b : basis_) {
          if (b.contains(x) && b.is_subset_of(meet)) {
            found = true;
            break;
          }
        }
        if (!found) {
          report.intersections_ok = false;
          report.notes.push_back("basis[" + std::to_string(i) + "] n basis[" + std::to_string(j) +
                                 "] is not a union of basis sets (at point " + std::to_string(x) +
                                 ")");
        }
      });
    }
  }
  return report;
}

std::vector<IndexSet> FiniteTopology::materialize_opens(int max_points) const {
  if (num_points_ > max_points || num_points_ >= 63) {
    throw TooLarge("open-set materialization capped at " + std::to_string(max_points) +
                   " points, got " + std::to_string(num_points_));
  }
  std::vector<std::uint64_t> nbhd(static_cast<std::size_t>(num_points_), 0);
  for (int x = 0; x < num_points_; ++x) {
    min_nbhd_[static_cast<std::size_t>(x)].for_each(
        [&](int y) { nbhd[static_cast<std::size_t>(x)] |= std::uint64_t{1} << y; });
  }
  std::vector<IndexSet> opens;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << num_points_); ++mask) {
    bool open = true;
    for (std::uint64_t bits = mask; bits != 0 && open; bits &= bits - 1) {
      int x = std::countr_zero(bits);
      if ((nbhd[static_cast<std::size_t>(x)] & ~mask) != 0) {
        open = false;
      }
    }
    if (open) {
      IndexSet o(num_points_);
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        o.insert(std::countr_zero(bits));
      }
      opens.push_back(o);
    }
  }
  std::sort(opens.begin(), opens.end());
  return opens;
}

bool same_topology(const FiniteTopology& a, const FiniteTopology& b, int* witness) {
  if (a.num_points() != b.num_points()) {
    if (witness != nullptr) {
      *witness = -1;
    }
    return false;
  }
  for (int x = 0; x < a.num_points(); ++x) {
    if (!(a.min_nbhd(x) == b.min_nbhd(x))) {
      if (witness != nullptr) {
        *witness = x;
      }
      return false;
    }
  }
  return true;
}

IndexSet image_of(const std::vector<int>& f, const IndexSet& A, int dst_points) {
  IndexSet out(dst_points);
  A.for_each([&](int x) { out.insert(f[static_cast<std::size_t>(x)]); });
  return out;
}

IndexSet preimage_of(const std::vector<int>& f, const IndexSet& B) {
  IndexSet out(static_cast<int>(f.size()));
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (B.contains(f[x])) {
      out.insert(static_cast<int>(x));
    }
  }
  return out;
}

MapTopologyReport check_map_topology(const FiniteTopology& src, const FiniteTopology& dst,
                                     const std::vector<int>& f) {
  MapTopologyReport report;
  for (int x = 0; x < src.num_points() && (report.continuous || report.open); ++x) {
    IndexSet img = image_of(f, src.min_nbhd(x), dst.num_points());
    if (report.continuous && !img.is_subset_of(dst.min_nbhd(f[static_cast<std::size_t>(x)]))) {
      report.continuous = false;
      report.witness = "f(N(x)) escapes N(f(x)) at point " + std::to_string(x);
    }
    if (report.open && !dst.is_open(img)) {
      report.open = false;
      if (report.witness.empty()) {
        report.witness = "f(N(x)) is not open at point " + std::to_string(x);
      }
    }
  }
  return report;
}

MapTopologyReport check_map_topology_materialized(const FiniteTopology& src,
                                                  const FiniteTopology& dst,
                                                  const std::vector<int>& f, int max_points) {
  MapTopologyReport report;
  auto opens_src = src.materialize_opens(max_points);
  auto opens_dst = dst.materialize_opens(max_points);
  for (const auto& o : opens_dst) {
    IndexSet pre = preimage_of(f, o);
    if (!std::binary_search(opens_src.begin(), opens_src.end(), pre)) {
      report.continuous = false;
      report.witness = "preimage of an open set is not open";
      break;
    }
  }
  for (const auto& o : opens_src) {
    IndexSet img = image_of(f, o, dst.num_points());
    if (!std::binary_search(opens_dst.begin(), opens_dst.end(), img)) {
      report.open = false;
      if (report.witness.empty()) {
        report.witness = "image of an open set is not open";
      }
      break;
    }
  }
  return report;
}

IndexSet reindex_subset(const IndexSet& A, const std::vector<int>& points) {
  IndexSet out(static_cast<int>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (A.contains(points[i])) {
      out.insert(static_cast<int>(i));
    }
  }
  return out;
}

std::vector<IndexSet> efilter_patch_basis(const IdempotentSet& E,
                                          const std::vector<IndexSet>& efilter_points) {
  const InverseSemigroup& L = E.semilattice;
  int p = static_cast<int>(efilter_points.size());
  std::vector<IndexSet> basis;
  for (int e = 0; e < L.size(); ++e) {
    std::vector<int> below;  // strictly below e; e itself in X would empty the set
    for (int x = 0; x < L.size(); ++x) {
      if (x != e && L.leq(x, e)) {
        below.push_back(x);
      }
    }
    if (below.size() > 20) {
      throw TooLarge("patch basis enumeration: down-set of an idempotent has " +
                     std::to_string(below.size()) + " elements");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << below.size()); ++mask) {
      IndexSet avoid(L.size());
      for (std::size_t i = 0; i < below.size(); ++i) {
        if ((mask >> i) & 1) {
          avoid.insert(below[i]);
        }
      }
      IndexSet members(p);
      for (int i = 0; i < p; ++i) {
        const IndexSet& xi = efilter_points[static_cast<std::size_t>(i)];
        if (xi.contains(e) && !xi.intersects(avoid)) {
          members.insert(i);
        }
      }
      basis.push_back(members);
    }
  }
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

TightEFilters tight_efilters(const InverseSemigroup& S, const IdempotentSet& E) {
  auto proper = efilters(S, E, EFilterSelect::proper);
  auto ultra = efilters(S, E, EFilterSelect::ultra);
  FiniteTopology patch(static_cast<int>(proper.size()), efilter_patch_basis(E, proper));
  IndexSet ultra_points(static_cast<int>(proper.size()));
  for (std::size_t i = 0; i < proper.size(); ++i) {
    if (std::binary_search(ultra.begin(), ultra.end(), proper[i])) {
      ultra_points.insert(static_cast<int>(i));
    }
  }
  IndexSet closed = patch.closure(ultra_points);
  TightEFilters out;
  closed.for_each([&](int i) { out.tight.push_back(proper[static_cast<std::size_t>(i)]); });
  out.equals_ultra = (closed == ultra_points);
  return out;
}

}  // namespace isg
