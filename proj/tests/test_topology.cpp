#include "isg/topology.hpp"

#include <algorithm>

#include "doctest.h"
#include "isg/errors.hpp"
#include "isg/filter_groupoid.hpp"
#include "test_util.hpp"

using namespace isg;
using testutil::set_of;

TEST_CASE("generated opens of a two-point chain space") {
  // points: the proper filters up(x1) (point 0) and up(x2) (point 1) of
  // chain(2); basis F_{x2} = both, F_{x1} = {up(x1)}
  std::vector<IndexSet> basis{IndexSet::of(2, {0, 1}), IndexSet::of(2, {0})};
  auto topo = generate_topology(2, basis);
  auto opens = topo.materialize_opens();
  REQUIRE(opens.size() == 3);
  CHECK(opens[0] == IndexSet(2));  // canonical order: {} < {0} < {0,1}
  CHECK(opens[1] == IndexSet::of(2, {0}));
  CHECK(opens[2] == IndexSet::of(2, {0, 1}));
  CHECK(topo.check_basis_validity().valid());
}

TEST_CASE("singleton basis gives the discrete topology") {
  std::vector<IndexSet> basis;
  for (int i = 0; i < 3; ++i) {
    basis.push_back(IndexSet::of(3, {i}));
  }
  auto topo = generate_topology(3, basis);
  CHECK(topo.materialize_opens().size() == 8);
  CHECK(topo.hausdorff_check().hausdorff);
}

TEST_CASE("hausdorff witness on an indiscrete pair") {
  std::vector<IndexSet> basis{IndexSet::of(2, {0, 1})};
  auto topo = generate_topology(2, basis);
  auto h = topo.hausdorff_check();
  CHECK(!h.hausdorff);
  CHECK(h.witness_a == 0);
  CHECK(h.witness_b == 1);

  auto single = generate_topology(1, {IndexSet::of(1, {0})});
  CHECK(single.hausdorff_check().hausdorff);
}

TEST_CASE("closure") {
  // points of the chain space again
  std::vector<IndexSet> basis{IndexSet::of(2, {0, 1}), IndexSet::of(2, {0})};
  auto topo = generate_topology(2, basis);
  CHECK(topo.closure(IndexSet::full(2)) == IndexSet::full(2));
  // the only basic around point 1 is the full set, which meets {0}
  CHECK(topo.closure(IndexSet::of(2, {0})) == IndexSet::full(2));
  CHECK(topo.closure(IndexSet(2)).empty());
}

TEST_CASE("basis validity diagnostics") {
  // {0,1} and {1,2}: the intersection {1} is not a union of members
  std::vector<IndexSet> basis{IndexSet::of(3, {0, 1}), IndexSet::of(3, {1, 2})};
  auto topo = generate_topology(3, basis);
  auto report = topo.check_basis_validity();
  CHECK(!report.intersections_ok);
  // generation still proceeds: {1} is open in the generated topology
  CHECK(topo.is_open(IndexSet::of(3, {1})));

  std::vector<IndexSet> gap{IndexSet::of(3, {0})};
  auto report2 = generate_topology(3, gap).check_basis_validity();
  CHECK(!report2.covers_all_points);
}

TEST_CASE("map checks: identity, constant into Sierpinski") {
  std::vector<IndexSet> discrete{IndexSet::of(2, {0}), IndexSet::of(2, {1})};
  auto t_discrete = generate_topology(2, discrete);
  std::vector<int> identity = {0, 1};
  auto idc = check_map_topology(t_discrete, t_discrete, identity);
  CHECK(idc.continuous);
  CHECK(idc.open);

  // Sierpinski-like target: opens are {}, {1}, {0,1}; the constant-0 map is
  // continuous but the image {0} of the open {0} is not open
  std::vector<IndexSet> sierpinski{IndexSet::of(2, {0, 1}), IndexSet::of(2, {1})};
  auto t_sier = generate_topology(2, sierpinski);
  std::vector<int> constant = {0, 0};
  auto cc = check_map_topology(t_discrete, t_sier, constant);
  CHECK(cc.continuous);
  CHECK(!cc.open);
  auto cm = check_map_topology_materialized(t_discrete, t_sier, constant);
  CHECK(cm.continuous == cc.continuous);
  CHECK(cm.open == cc.open);
}

TEST_CASE("the unit correspondence is a homeomorphism on brandt(2) unit spaces") {
  auto B2 = brandt(2);
  auto E = idempotents(B2);
  auto FG = build_filter_groupoid(B2, E, FilterKind::proper);
  auto unit_ids = FG.g.units();
  auto fpatch = patch_basis(B2, FG);
  std::vector<IndexSet> unit_basis;
  for (const auto& B : fpatch) {
    unit_basis.push_back(reindex_subset(B, unit_ids));
  }
  FiniteTopology t_units(static_cast<int>(unit_ids.size()), unit_basis);
  auto efp = efilters(B2, E, EFilterSelect::proper);
  FiniteTopology t_efp(static_cast<int>(efp.size()), efilter_patch_basis(E, efp));
  std::vector<int> eps_map;
  for (int u : unit_ids) {
    auto xi = efilter_of_filter(B2, E, FG.filter[static_cast<std::size_t>(u)]);
    eps_map.push_back(static_cast<int>(
        std::lower_bound(efp.begin(), efp.end(), xi) - efp.begin()));
  }
  auto mc = check_map_topology(t_units, t_efp, eps_map);
  CHECK(mc.continuous);
  CHECK(mc.open);
  auto mm = check_map_topology_materialized(t_units, t_efp, eps_map);
  CHECK(mm.continuous);
  CHECK(mm.open);
}

TEST_CASE("minimal-neighborhood and materialized routes agree") {
  // across several small generated spaces, openness by membership in the
  // materialized family must match the pointwise test
  auto B2 = brandt(2);
  auto E = idempotents(B2);
  auto FG = build_filter_groupoid(B2, E, FilterKind::proper);
  FiniteTopology t(FG.g.num_arrows, principal_basis(B2, FG));
  auto opens = t.materialize_opens();
  for (std::uint64_t mask = 0; mask < (1u << FG.g.num_arrows); ++mask) {
    IndexSet A(FG.g.num_arrows);
    for (int i = 0; i < FG.g.num_arrows; ++i) {
      if ((mask >> i) & 1) {
        A.insert(i);
      }
    }
    bool materialized = std::binary_search(opens.begin(), opens.end(), A);
    CHECK(materialized == t.is_open(A));
  }
}

TEST_CASE("patch topology refines the principal topology on filter arrows") {
  for (const auto& S : {chain(2), brandt(2), symmetric_inverse(2)}) {
    auto E = idempotents(S);
    auto FG = build_filter_groupoid(S, E, FilterKind::proper);
    FiniteTopology patch(FG.g.num_arrows, patch_basis(S, FG));
    for (const auto& fs : principal_basis(S, FG)) {
      CHECK(patch.is_open(fs));
    }
  }
}

TEST_CASE("patch topology on proper filters of a finite instance is discrete") {
  auto I2 = symmetric_inverse(2);
  auto E = idempotents(I2);
  auto FG = build_filter_groupoid(I2, E, FilterKind::proper);
  FiniteTopology patch(FG.g.num_arrows, patch_basis(I2, FG));
  for (int a = 0; a < FG.g.num_arrows; ++a) {
    CHECK(patch.min_nbhd(a) == IndexSet::of(FG.g.num_arrows, {a}));
  }
}

TEST_CASE("tight E-filters") {
  auto C2 = chain(2);
  auto EC = idempotents(C2);
  auto t1 = tight_efilters(C2, EC);
  REQUIRE(t1.tight.size() == 1);
  CHECK(t1.equals_ultra);
  CHECK(t1.tight[0] == efilters(C2, EC, EFilterSelect::ultra)[0]);

  auto B2 = brandt(2);
  auto EB = idempotents(B2);
  auto t2 = tight_efilters(B2, EB);
  CHECK(t2.tight.size() == 2);
  CHECK(t2.equals_ultra);

  auto C1 = chain(1);  // E = {0, e}
  auto E1 = idempotents(C1);
  auto t3 = tight_efilters(C1, E1);
  REQUIRE(t3.tight.size() == 1);
  CHECK(t3.tight[0].count() == 1);
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(generate_topology(1 << 15, {}), TooLarge);
  std::vector<IndexSet> basis;
  for (int i = 0; i < 30; ++i) {
    basis.push_back(IndexSet::of(30, {i}));
  }
  auto t = generate_topology(30, basis);
  CHECK_THROWS_AS(t.materialize_opens(16), TooLarge);
}
