#include "isg/index_set.hpp"

#include <random>

#include "doctest.h"

using isg::IndexSet;

TEST_CASE("index set basics") {
  IndexSet a(70);
  CHECK(a.empty());
  a.insert(0);
  a.insert(69);
  CHECK(a.count() == 2);
  CHECK(a.contains(0));
  CHECK(a.contains(69));
  CHECK(!a.contains(1));
  CHECK(a.min() == 0);
  a.erase(0);
  CHECK(a.min() == 69);

  auto full = IndexSet::full(70);
  CHECK(full.count() == 70);
  CHECK(full.complement().empty());
}

TEST_CASE("set algebra") {
  auto a = IndexSet::of(10, {1, 3, 5});
  auto b = IndexSet::of(10, {3, 5, 7});
  CHECK((a & b) == IndexSet::of(10, {3, 5}));
  CHECK((a | b) == IndexSet::of(10, {1, 3, 5, 7}));
  CHECK((a - b) == IndexSet::of(10, {1}));
  CHECK(a.intersects(b));
  CHECK(IndexSet::of(10, {3, 5}).is_subset_of(a));
  CHECK(!a.is_subset_of(b));
}

TEST_CASE("canonical order is lexicographic on sorted member lists") {
  // {0,2} < {1} because the smallest differing index belongs to the left set
  CHECK(IndexSet::of(4, {0, 2}) < IndexSet::of(4, {1}));
  // a strict prefix is smaller
  CHECK(IndexSet::of(4, {1}) < IndexSet::of(4, {1, 2}));
  CHECK(!(IndexSet::of(4, {1}) < IndexSet::of(4, {1})));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IndexSet x(90), y(90);
    for (int i = 0; i < 90; ++i) {
      if (rng() % 3 == 0) {
        x.insert(i);
      }
      if (rng() % 3 == 0) {
        y.insert(i);
      }
    }
    bool lt = x < y;
    bool gt = y < x;
    CHECK((lt || gt || x == y));
    CHECK(!(lt && gt));
    if (!(x == y)) {
      auto xs = x.elements();
      auto ys = y.elements();
      bool expected = std::lexicographical_compare(xs.begin(), xs.end(), ys.begin(), ys.end());
      CHECK(lt == expected);
    }
  }
}
