// Acceptance suite: one test case per criterion, printing a PASS/FAIL line
// for each. Run through ctest or directly:
//   ./isg_acceptance --cli-path=/path/to/isg
#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "isg/emit.hpp"
#include "isg/filter_groupoid.hpp"
#include "isg/filters.hpp"
#include "isg/germ_groupoid.hpp"
#include "isg/isomorphism.hpp"
#include "isg/semigroup_io.hpp"
#include "isg/topology.hpp"
#include "test_util.hpp"

using namespace isg;

namespace {

std::string g_cli_path;

struct CriterionLine {
  int number;
  std::string description;
  bool passed = false;

  ~CriterionLine() {
    std::printf("[criterion %d] %s: %s\n", number, passed ? "PASS" : "FAIL",
                description.c_str());
    std::fflush(stdout);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  RunResult result;
  std::string cmd = g_cli_path + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return result;
  }
  char buffer[4096];
  while (std::fgets(buffer, sizeof(buffer), pipe) != nullptr) {
    result.output += buffer;
  }
  int status = pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

const Claim* find_claim(const VerificationReport& report, const std::string& id) {
  for (const auto& c : report.claims) {
    if (c.id == id) {
      return &c;
    }
  }
  return nullptr;
}

// Greedy generator shrinking: drop generators while the predicate keeps
// failing. Returns a minimal failing generator list.
template <typename FailsFn>
std::vector<int> shrink_generators(std::vector<int> gens, FailsFn fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < gens.size() && !progress; ++i) {
      if (gens.size() == 1) {
        break;
      }
      std::vector<int> reduced = gens;
      reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
      if (fails(reduced)) {
        gens = reduced;
        progress = true;
      }
    }
  }
  return gens;
}

}  // namespace

TEST_CASE("criterion 1: filter-enumeration oracle") {
  CriterionLine line{1, "principal and bruteforce enumerations agree, with pinned counts"};
  struct Spec {
    InverseSemigroup S;
    std::string name;
    int proper;
    int ultra;
  };
  std::vector<Spec> specs;
  specs.push_back({chain(2), "chain(2)", 2, 1});
  specs.push_back({brandt(2), "brandt(2)", 4, 4});
  specs.push_back({brandt(3), "brandt(3)", 9, 9});
  specs.push_back({symmetric_inverse(2), "symmetric_inverse(2)", 6, 4});
  for (const auto& spec : specs) {
    auto t0 = std::chrono::steady_clock::now();
    auto principal_proper =
        enumerate_filters(spec.S, EnumerationMode::principal, FilterSelect::proper);
    auto brute_proper =
        enumerate_filters(spec.S, EnumerationMode::bruteforce, FilterSelect::proper);
    auto principal_ultra =
        enumerate_filters(spec.S, EnumerationMode::principal, FilterSelect::ultra);
    auto brute_ultra = enumerate_filters(spec.S, EnumerationMode::bruteforce, FilterSelect::ultra);
    INFO(spec.name);
    CHECK(principal_proper == brute_proper);
    CHECK(principal_ultra == brute_ultra);
    CHECK(static_cast<int>(principal_proper.size()) == spec.proper);
    CHECK(static_cast<int>(principal_ultra.size()) == spec.ultra);
    CHECK(seconds_since(t0) < 1.0);
  }
  // symmetric_inverse(3) in principal mode only (34 elements)
  auto t0 = std::chrono::steady_clock::now();
  auto I3 = symmetric_inverse(3);
  auto proper = enumerate_filters(I3, EnumerationMode::principal, FilterSelect::proper);
  CHECK(proper.size() == 33);
  for (const auto& F : proper) {
    CHECK(is_filter_set(I3, F));
    CHECK(!F.contains(0));
  }
  CHECK(seconds_since(t0) < 1.0);
  line.passed = true;
}

TEST_CASE("criterion 2: groupoid construction on brandt(2)") {
  CriterionLine line{2, "proper-filter groupoid of brandt(2): axioms, 4 arrows / 2 units, "
                        "isomorphic to the 2x2 pair groupoid"};
  auto t0 = std::chrono::steady_clock::now();
  auto B2 = brandt(2);
  auto E = idempotents(B2);
  auto FG = build_filter_groupoid(B2, E, FilterKind::proper);
  CHECK(check_axioms(FG.g).ok);
  CHECK(FG.g.num_arrows == 4);
  REQUIRE(FG.g.units().size() == 2);

  auto P = pair_groupoid(2);
  auto fg_units = FG.g.units();
  auto p_units = P.units();
  std::vector<int> unit_image(static_cast<std::size_t>(FG.g.num_arrows), -1);
  for (std::size_t i = 0; i < fg_units.size(); ++i) {
    unit_image[static_cast<std::size_t>(fg_units[i])] = p_units[i];
  }
  std::vector<int> phi(static_cast<std::size_t>(FG.g.num_arrows), -1);
  for (int a = 0; a < FG.g.num_arrows; ++a) {
    int d = unit_image[static_cast<std::size_t>(FG.g.source(a))];
    int r = unit_image[static_cast<std::size_t>(FG.g.range(a))];
    for (int b = 0; b < P.num_arrows; ++b) {
      if (P.source(b) == d && P.range(b) == r) {
        phi[static_cast<std::size_t>(a)] = b;
      }
    }
  }
  CHECK(check_isomorphism(FG.g, P, phi).ok);
  CHECK(seconds_since(t0) < 1.0);
  line.passed = true;
}

TEST_CASE("criterion 3: groupoid law suite") {
  CriterionLine line{3, "filter and principal-set law checks pass exhaustively on the curated instances"};
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& S : {chain(2), brandt(2), brandt(3), symmetric_inverse(2)}) {
    auto E = idempotents(S);
    for (const auto& check : check_filter_laws(S, E)) {
      INFO(check.name, ": ", check.witness);
      CHECK(check.ok);
    }
    for (const auto& check : check_principal_set_laws(S, E)) {
      INFO(check.name, ": ", check.witness);
      CHECK(check.ok);
    }
  }
  // quantifier coverage on symmetric_inverse(2): 49 (s,t) pairs, 7 sets
  auto I2 = symmetric_inverse(2);
  auto E2 = idempotents(I2);
  auto checks = check_principal_set_laws(I2, E2);
  REQUIRE(checks.size() == 5);
  CHECK(checks[0].cases == 7);
  CHECK(checks[1].cases == 49);
  CHECK(checks[2].cases == 7);
  CHECK(checks[3].cases == 7);
  CHECK(checks[4].cases == 1);
  CHECK(seconds_since(t0) < 5.0);
  line.passed = true;
}

TEST_CASE("criterion 4: the full verification suite at finite scale") {
  CriterionLine line{4, "verify_all reports PASS on every curated instance"};
  for (const auto& S : {chain(2), brandt(2), brandt(3)}) {
    auto report = verify_all(S);
    INFO(format_report(report));
    CHECK(report.all_pass());
    const Claim* topo = find_claim(report, "isomorphism.topological");
    REQUIRE(topo != nullptr);
    CHECK(topo->domain.find("opens materialized") != std::string::npos);
  }
  auto t0 = std::chrono::steady_clock::now();
  auto report = verify_all(symmetric_inverse(2));
  INFO(format_report(report));
  CHECK(report.all_pass());
  CHECK(seconds_since(t0) < 30.0);
  // the topological claims really did run against materialized open families
  const Claim* topo = find_claim(report, "isomorphism.topological");
  REQUIRE(topo != nullptr);
  CHECK(topo->domain.find("opens materialized") != std::string::npos);
  line.passed = true;
}

TEST_CASE("criterion 5: ultrafilter restriction") {
  CriterionLine line{5, "the map restricts to a bijection onto the ultragerms; the ultra basics generate the "
                        "subspace patch topology"};
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& S : {chain(2), brandt(2), brandt(3), symmetric_inverse(2)}) {
    auto E = idempotents(S);
    auto FGu = build_filter_groupoid(S, E, FilterKind::ultra);
    auto GGu = build_germ_groupoid(S, E, GermKind::ultra);
    REQUIRE(FGu.g.num_arrows == GGu.g.num_arrows);
    std::vector<int> phi;
    for (int a = 0; a < FGu.g.num_arrows; ++a) {
      phi.push_back(GGu.arrow_of(germ_of_filter(S, E, FGu.filter[static_cast<std::size_t>(a)])));
      CHECK(phi.back() >= 0);
    }
    CHECK(check_isomorphism(FGu.g, GGu.g, phi).ok);

    // {U_s} versus the subspace patch basis on the ultra arrows
    auto FG = build_filter_groupoid(S, E, FilterKind::proper);
    auto ultra_ids = FG.ultra_arrows().elements();
    std::vector<IndexSet> u_basis;
    for (int s = 0; s < S.size(); ++s) {
      u_basis.push_back(reindex_subset(basic_set(S, FG, BasicKind::ultra, s).members, ultra_ids));
    }
    std::vector<IndexSet> sub_patch;
    for (const auto& B : patch_basis(S, FG)) {
      sub_patch.push_back(reindex_subset(B, ultra_ids));
    }
    FiniteTopology via_us(static_cast<int>(ultra_ids.size()), u_basis);
    FiniteTopology via_patch(static_cast<int>(ultra_ids.size()), sub_patch);
    CHECK(same_topology(via_us, via_patch));

    // the corresponding claims in the consolidated report
    auto report = verify_all(S);
    for (const auto& id : {"restriction.ultra-image", "restriction.topological", "restriction.ultra-basis"}) {
      const Claim* c = find_claim(report, id);
      REQUIRE(c != nullptr);
      INFO(id, ": ", c->witness);
      CHECK(c->pass);
    }
  }
  CHECK(seconds_since(t0) < 5.0);
  line.passed = true;
}

TEST_CASE("criterion 6: Hausdorff remark") {
  CriterionLine line{6, "principal basis: non-Hausdorff on chain(2) with witness, Hausdorff on "
                        "brandt(2); patch basis always Hausdorff"};
  auto t0 = std::chrono::steady_clock::now();
  auto C2 = chain(2);
  auto EC = idempotents(C2);
  auto FG = build_filter_groupoid(C2, EC, FilterKind::proper);
  auto unit_ids = FG.g.units();
  std::vector<IndexSet> principal_units, patch_units;
  for (const auto& B : principal_basis(C2, FG)) {
    principal_units.push_back(reindex_subset(B, unit_ids));
  }
  for (const auto& B : patch_basis(C2, FG)) {
    patch_units.push_back(reindex_subset(B, unit_ids));
  }
  FiniteTopology t_principal(static_cast<int>(unit_ids.size()), principal_units);
  FiniteTopology t_patch(static_cast<int>(unit_ids.size()), patch_units);
  auto h = t_principal.hausdorff_check();
  REQUIRE(!h.hausdorff);
  // the witness pair is (up(x2), up(x1)) = ({x2}, {x1,x2}) in some order
  auto wa = FG.filter[static_cast<std::size_t>(unit_ids[static_cast<std::size_t>(h.witness_a)])];
  auto wb = FG.filter[static_cast<std::size_t>(unit_ids[static_cast<std::size_t>(h.witness_b)])];
  auto up_e = testutil::set_of(C2, {"x2"});
  auto up_f = testutil::set_of(C2, {"x1", "x2"});
  CHECK(((wa == up_e && wb == up_f) || (wa == up_f && wb == up_e)));
  CHECK(t_patch.hausdorff_check().hausdorff);

  // brandt(2): all distinct idempotent products vanish, so no witness pair
  // exists and the principal basis is already Hausdorff
  auto B2 = brandt(2);
  auto EB = idempotents(B2);
  bool any_nonzero_product = false;
  for (int e : EB.elements) {
    for (int f : EB.elements) {
      if (e != f && B2.product(e, f) != 0) {
        any_nonzero_product = true;
      }
    }
  }
  CHECK(!any_nonzero_product);
  auto FGB = build_filter_groupoid(B2, EB, FilterKind::proper);
  auto unit_ids_b = FGB.g.units();
  std::vector<IndexSet> principal_units_b;
  for (const auto& B : principal_basis(B2, FGB)) {
    principal_units_b.push_back(reindex_subset(B, unit_ids_b));
  }
  FiniteTopology t_principal_b(static_cast<int>(unit_ids_b.size()), principal_units_b);
  CHECK(t_principal_b.hausdorff_check().hausdorff);

  // the consolidated claims agree
  auto report_c = verify_all(C2);
  auto report_b = verify_all(B2);
  const Claim* rc = find_claim(report_c, "hausdorff.principal-basis");
  const Claim* rb = find_claim(report_b, "hausdorff.principal-basis");
  REQUIRE(rc != nullptr);
  REQUIRE(rb != nullptr);
  CHECK(rc->pass);
  CHECK(rc->witness.find("non-Hausdorff") != std::string::npos);
  CHECK(rb->pass);
  CHECK(rb->witness.find("Hausdorff as predicted") != std::string::npos);
  CHECK(seconds_since(t0) < 1.0);
  line.passed = true;
}

TEST_CASE("criterion 7: tight equals ultra at finite scale") {
  CriterionLine line{7, "tight E-filters = E-ultrafilters and tight arrows = ultrafilter arrows"};
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& S : {chain(1), chain(2), brandt(2), brandt(3), symmetric_inverse(2)}) {
    auto E = idempotents(S);
    auto tight = tight_efilters(S, E);
    CHECK(tight.equals_ultra);
    auto sorted = tight.tight;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == efilters(S, E, EFilterSelect::ultra));
    auto FG = build_filter_groupoid(S, E, FilterKind::proper);
    CHECK(FG.tight_arrows() == FG.ultra_arrows());
  }
  CHECK(seconds_since(t0) < 1.0);
  line.passed = true;
}

TEST_CASE("criterion 8: fuzz suite over subsemigroups of symmetric_inverse(3)") {
  CriterionLine line{8, "100 random inverse subsemigroups of symmetric_inverse(3) pass verify_all"};
  auto I3 = symmetric_inverse(3);
  std::mt19937 rng(20250808);

  auto fails = [&](const std::vector<int>& gens) {
    IndexSet g(I3.size());
    for (int x : gens) {
      g.insert(x);
    }
    auto sub = inverse_closure_subsemigroup(I3, g).sub;
    return !verify_all(sub).all_pass();
  };

  // the shrinker itself, exercised against a synthetic failure predicate
  {
    auto contains_three = [](const std::vector<int>& gens) {
      return std::find(gens.begin(), gens.end(), 3) != gens.end();
    };
    auto minimal = shrink_generators(std::vector<int>{1, 3, 5, 7}, contains_three);
    REQUIRE(minimal == std::vector<int>{3});
  }

  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int count = 1 + static_cast<int>(rng() % 3);
    std::vector<int> gens;
    for (int i = 0; i < count; ++i) {
      gens.push_back(static_cast<int>(rng() % static_cast<unsigned>(I3.size())));
    }
    IndexSet g(I3.size());
    for (int x : gens) {
      g.insert(x);
    }
    auto closure = inverse_closure_subsemigroup(I3, g);
    auto t0 = std::chrono::steady_clock::now();
    auto report = verify_all(closure.sub);
    double elapsed = seconds_since(t0);
    CHECK(elapsed < 5.0);
    if (!report.all_pass()) {
      ++failures;
      auto minimal = shrink_generators(gens, fails);
      IndexSet mg(I3.size());
      for (int x : minimal) {
        mg.insert(x);
      }
      auto witness = inverse_closure_subsemigroup(I3, mg);
      std::printf("fuzz failure (trial %d); minimal witness table:\n%s\n", trial,
                  format_semigroup(witness.sub).c_str());
      std::printf("%s\n", format_report(verify_all(witness.sub)).c_str());
    }
  }
  CHECK(failures == 0);
  line.passed = failures == 0;
}

TEST_CASE("criterion 9: mutation sensitivity") {
  CriterionLine line{9, "a rerouted compose entry or flipped germ equivalence makes check exit 1 "
                        "with a witness"};
  // in-process: both faults must produce failing claims with witnesses
  for (auto fault : {FaultKind::reroute_compose, FaultKind::flip_germ_equiv}) {
    VerifyOptions opts;
    opts.fault = fault;
    auto report = verify_all(brandt(2), opts);
    CHECK(!report.all_pass());
    bool witnessed = false;
    for (const auto& c : report.claims) {
      if (!c.pass && !c.skipped && !c.witness.empty()) {
        witnessed = true;
      }
    }
    CHECK(witnessed);
  }

  // end to end through the CLI exit-code contract
  REQUIRE_MESSAGE(!g_cli_path.empty(), "--cli-path not provided");
  auto clean = run_cli("check --family brandt:2");
  CHECK(clean.exit_code == 0);
  CHECK(clean.output.find("overall: PASS") != std::string::npos);

  auto rerouted = run_cli("check --family brandt:2 --inject-fault reroute-compose");
  CHECK(rerouted.exit_code == 1);
  CHECK(rerouted.output.find("FAIL") != std::string::npos);
  CHECK(rerouted.output.find("axiom") != std::string::npos);

  auto flipped = run_cli("check --family brandt:2 --inject-fault flip-germ-equiv");
  CHECK(flipped.exit_code == 1);
  CHECK(flipped.output.find("FAIL") != std::string::npos);

  auto bad_input = run_cli("check --family nosuch:1");
  CHECK(bad_input.exit_code == 2);
  line.passed = true;
}

TEST_CASE("cli output determinism") {
  REQUIRE_MESSAGE(!g_cli_path.empty(), "--cli-path not provided");
  auto a = run_cli("check --family brandt:2 --format json");
  auto b = run_cli("check --family brandt:2 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  auto d1 = run_cli("emit-dot --family brandt:2 --kind filters");
  auto d2 = run_cli("emit-dot --family brandt:2 --kind filters");
  CHECK(d1.output == d2.output);
  CHECK(d1.output.find("digraph") != std::string::npos);
}

int main(int argc, char** argv) {
  std::vector<char*> filtered;
  for (int i = 0; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.rfind("--cli-path=", 0) == 0) {
      g_cli_path = arg.substr(std::string("--cli-path=").size());
    } else {
      filtered.push_back(argv[i]);
    }
  }
  doctest::Context context;
  context.applyCommandLine(static_cast<int>(filtered.size()), filtered.data());
  return context.run();
}
