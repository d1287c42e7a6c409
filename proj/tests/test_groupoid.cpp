#include "isg/groupoid.hpp"

#include "doctest.h"

using namespace isg;

TEST_CASE("pair groupoid satisfies the axioms") {
  auto G = pair_groupoid(2);
  CHECK(G.num_arrows == 4);
  CHECK(check_axioms(G).ok);
  CHECK(G.units().size() == 2);

  auto G3 = pair_groupoid(3);
  CHECK(check_axioms(G3).ok);
  CHECK(G3.units().size() == 3);
}

TEST_CASE("a rerouted composition entry trips axiom (iii)") {
  auto G = pair_groupoid(2);
  // reroute the first defined entry to a different arrow
  bool done = false;
  for (int a = 0; a < G.num_arrows && !done; ++a) {
    for (int b = 0; b < G.num_arrows && !done; ++b) {
      int p = G.product(a, b);
      if (p >= 0) {
        G.set_product(a, b, (p + 1) % G.num_arrows);
        done = true;
      }
    }
  }
  auto result = check_axioms(G);
  CHECK(!result.ok);
  CHECK(!result.witness.empty());
}

TEST_CASE("local bisections") {
  auto G = pair_groupoid(2);
  CHECK(is_local_bisection(G, IndexSet::of(4, {0})));  // singleton
  // all four arrows share sources
  auto all = IndexSet::full(4);
  auto check = local_bisection_check(G, all);
  CHECK(!check.source_injective);
  CHECK(!check.range_injective);
  CHECK(!is_local_bisection(G, all));
  // the two units form a bisection
  IndexSet units = G.unit_set();
  CHECK(is_local_bisection(G, units));
}

TEST_CASE("source and range injectivity can differ on arbitrary subsets") {
  // arrows (0,0) and (0,1) have distinct sources but the same range, so the
  // two answers genuinely disagree; is_local_bisection follows the source
  auto G = pair_groupoid(2);
  IndexSet A = IndexSet::of(4, {0, 1});  // (0,0) and (0,1)
  auto check = local_bisection_check(G, A);
  CHECK(check.source_injective);
  CHECK(!check.range_injective);
  CHECK(is_local_bisection(G, A));
}

TEST_CASE("etale basis checks") {
  auto G = pair_groupoid(2);
  // the empty family and the family of the empty set are vacuously fine
  CHECK(is_etale_basis(G, {}).ok);
  CHECK(is_etale_basis(G, {IndexSet(4)}).ok);
  // all singletons + empty: inverses are singletons, products are singletons
  // or empty
  std::vector<IndexSet> singletons{IndexSet(4)};
  for (int a = 0; a < 4; ++a) {
    singletons.push_back(IndexSet::of(4, {a}));
  }
  CHECK(is_etale_basis(G, singletons).ok);
  // a lone non-unit arrow fails: its inverse set is missing
  std::vector<IndexSet> lone{IndexSet::of(4, {1})};
  auto r = is_etale_basis(G, lone);
  CHECK(!r.ok);
}

TEST_CASE("isomorphism checker") {
  auto G = pair_groupoid(2);
  std::vector<int> identity = {0, 1, 2, 3};
  CHECK(check_isomorphism(G, G, identity).ok);

  // swapping a unit with a non-unit is not a homomorphism
  std::vector<int> swapped = {1, 0, 2, 3};
  auto r = check_isomorphism(G, G, swapped);
  CHECK(!r.ok);
  CHECK(!r.witness.empty());

  std::vector<int> not_injective = {0, 0, 2, 3};
  CHECK(!check_isomorphism(G, G, not_injective).ok);
}

TEST_CASE("subgroupoids") {
  auto G = pair_groupoid(2);
  CHECK(is_subgroupoid(G, G.unit_set()));
  CHECK(is_subgroupoid(G, IndexSet::full(4)));
  CHECK(is_subgroupoid(G, IndexSet(4)));
  // a single non-unit arrow misses its inverse and units
  int non_unit = -1;
  IndexSet units = G.unit_set();
  for (int a = 0; a < 4; ++a) {
    if (!units.contains(a)) {
      non_unit = a;
    }
  }
  CHECK(!is_subgroupoid(G, IndexSet::of(4, {non_unit})));
}

TEST_CASE("sources and ranges") {
  auto G = pair_groupoid(3);
  IndexSet units = G.unit_set();
  for (int a = 0; a < G.num_arrows; ++a) {
    CHECK(G.source(G.inverse(a)) == G.range(a));
    int d = G.source(a);
    CHECK(G.source(d) == d);
    CHECK(G.range(d) == d);
    // units are exactly the fixed points of d (and of r)
    CHECK(units.contains(a) == (G.source(a) == a));
    CHECK(units.contains(a) == (G.range(a) == a));
  }
}
