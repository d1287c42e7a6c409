#include "isg/isomorphism.hpp"

#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"

using namespace isg;
using testutil::el;
using testutil::set_of;

namespace {

IndexSet e_set(const InverseSemigroup& S, const IdempotentSet& E,
               const std::vector<std::string>& labels) {
  IndexSet out(E.size());
  for (const auto& l : labels) {
    out.insert(E.from_s(el(S, l)));
  }
  return out;
}

}  // namespace

TEST_CASE("the filter-to-germ map on brandt(2)") {
  auto B2 = brandt(2);
  auto E = idempotents(B2);
  auto p = germ_of_filter(B2, E, set_of(B2, {"e12"}));
  CHECK(p.element == el(B2, "e12"));
  CHECK(p.carrier == e_set(B2, E, {"e22"}));
}

TEST_CASE("unit filters map to unit germs") {
  auto B2 = brandt(2);
  auto E = idempotents(B2);
  auto GG = build_germ_groupoid(B2, E, GermKind::proper);
  for (const auto& xi : GG.universe) {
    auto F = filter_of_efilter(B2, E, xi);
    auto p = germ_of_filter(B2, E, F);
    int arrow = GG.arrow_of(p);
    REQUIRE(arrow >= 0);
    CHECK(GG.g.source(arrow) == arrow);  // a unit
    CHECK(GG.canonical[static_cast<std::size_t>(arrow)].carrier == xi);
  }
}

TEST_CASE("the filter-to-germ map is representative-blind on chain(2)") {
  auto C2 = chain(2);
  auto E = idempotents(C2);
  auto GG = build_germ_groupoid(C2, E, GermKind::proper);
  auto F = set_of(C2, {"x1", "x2"});
  auto src_ef = source_efilter(C2, E, F);
  CHECK(GG.arrow_of({el(C2, "x1"), src_ef}) == GG.arrow_of({el(C2, "x2"), src_ef}));
}

TEST_CASE("the inverse formula") {
  auto B2 = brandt(2);
  auto E = idempotents(B2);
  CHECK(filter_of_germ(B2, E, {el(B2, "e12"), e_set(B2, E, {"e22"})}) == set_of(B2, {"e12"}));
  // unit germs come back as the unit filters
  CHECK(filter_of_germ(B2, E, {el(B2, "e11"), e_set(B2, E, {"e11"})}) == set_of(B2, {"e11"}));

  auto I2 = symmetric_inverse(2);
  auto EI = idempotents(I2);
  CHECK(filter_of_germ(I2, EI, {el(I2, "[0>1,1>0]"), e_set(I2, EI, {"[0>0,1>1]"})}) ==
        set_of(I2, {"[0>1,1>0]"}));
}

TEST_CASE("the filter-to-germ map round trips on curated instances") {
  for (const auto& S : {chain(2), brandt(2), symmetric_inverse(2)}) {
    auto E = idempotents(S);
    auto FG = build_filter_groupoid(S, E, FilterKind::proper);
    auto GG = build_germ_groupoid(S, E, GermKind::proper);
    auto phi = filter_to_germ_map(S, E, FG, GG);
    REQUIRE(FG.g.num_arrows == GG.g.num_arrows);
    std::vector<bool> hit(static_cast<std::size_t>(GG.g.num_arrows), false);
    for (int a = 0; a < FG.g.num_arrows; ++a) {
      REQUIRE(phi[static_cast<std::size_t>(a)] >= 0);
      hit[static_cast<std::size_t>(phi[static_cast<std::size_t>(a)])] = true;
      CHECK(filter_of_germ(S, E, germ_of_filter(S, E, FG.filter[static_cast<std::size_t>(a)])) ==
            FG.filter[static_cast<std::size_t>(a)]);
    }
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("verify_all passes on the curated instances") {
  for (const auto& S : {chain(1), chain(2), brandt(2), brandt(3), symmetric_inverse(2)}) {
    auto report = verify_all(S);
    INFO(format_report(report));
    CHECK(report.all_pass());
  }
}

TEST_CASE("verify_all passes on the one-element semigroup") {
  std::vector<int> trivial = {0};
  auto S = *validate_inverse_semigroup(1, trivial).semigroup;
  auto report = verify_all(S);
  INFO(format_report(report));
  CHECK(report.all_pass());
}

TEST_CASE("non-Hausdorff remark claims") {
  // chain(2): x1 x2 = x1 != 0, so the principal basis cannot separate the
  // two units; the claim reports the witness pair
  auto report = verify_all(chain(2));
  const Claim* remark = nullptr;
  for (const auto& c : report.claims) {
    if (c.id == "hausdorff.principal-basis") {
      remark = &c;
    }
  }
  REQUIRE(remark != nullptr);
  CHECK(remark->pass);
  CHECK(remark->witness.find("non-Hausdorff") != std::string::npos);
  CHECK(remark->witness.find("{x1,x2}") != std::string::npos);
  CHECK(remark->witness.find("{x2}") != std::string::npos);

  // brandt(2): distinct idempotents multiply to zero, so the units are
  // Hausdorff even under the principal basis
  auto report2 = verify_all(brandt(2));
  for (const auto& c : report2.claims) {
    if (c.id == "hausdorff.principal-basis") {
      CHECK(c.pass);
      CHECK(c.witness.find("Hausdorff as predicted") != std::string::npos);
    }
  }
}

TEST_CASE("rerouted composition is caught with a witness") {
  VerifyOptions opts;
  opts.fault = FaultKind::reroute_compose;
  auto report = verify_all(brandt(2), opts);
  CHECK(!report.all_pass());
  bool axiom_failed = false;
  for (const auto& c : report.claims) {
    if (c.id == "construction.filter-groupoid" && !c.pass) {
      axiom_failed = true;
      CHECK(!c.witness.empty());
    }
  }
  CHECK(axiom_failed);
}

TEST_CASE("flipped germ equivalence is caught with a witness") {
  VerifyOptions opts;
  opts.fault = FaultKind::flip_germ_equiv;
  for (const auto& S : {brandt(2), chain(2)}) {
    auto report = verify_all(S, opts);
    CHECK(!report.all_pass());
    bool witnessed = false;
    for (const auto& c : report.claims) {
      if (!c.pass && !c.witness.empty()) {
        witnessed = true;
      }
    }
    CHECK(witnessed);
  }
}

TEST_CASE("report formatting") {
  auto report = verify_all(chain(1));
  auto text = format_report(report);
  CHECK(text.find("overall: PASS") != std::string::npos);
  CHECK(text.find("isomorphism.bijective") != std::string::npos);
}
