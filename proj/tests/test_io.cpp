#include <string>

#include "doctest.h"
#include "isg/emit.hpp"
#include "isg/errors.hpp"
#include "isg/filter_groupoid.hpp"
#include "isg/semigroup_io.hpp"
#include "test_util.hpp"

using namespace isg;

TEST_CASE("text format round trip") {
  auto B2 = brandt(2);
  auto text = format_semigroup(B2);
  auto back = load_semigroup_text(text);
  CHECK(back.size() == 5);
  CHECK(back.table() == B2.table());
  CHECK(back.labels() == B2.labels());
  CHECK(format_semigroup(back) == text);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_semigroup_text(""), ParseError);
  CHECK_THROWS_AS(parse_semigroup_text("two\n"), ParseError);
  // non-square row
  try {
    parse_semigroup_text("2\n0 1\n0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& ex) {
    CHECK(ex.line == 3);
    CHECK(std::string(ex.what()).find("square") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_semigroup_text("2\n0 1\n1 5\n"), ParseError);
  CHECK_THROWS_AS(parse_semigroup_text("1\n0\njunk\n"), ParseError);
  CHECK_THROWS_AS(parse_semigroup_text("1\n0\nlabel 3 x\n"), ParseError);
}

TEST_CASE("missing zero is reported and adjoinable") {
  // Z2 as a table
  std::string z2 = "2\n0 1\n1 0\n";
  CHECK_THROWS_AS(load_semigroup_text(z2), MissingZero);
  auto S = load_semigroup_text(z2, {true});
  CHECK(S.size() == 3);
  CHECK(S.product(0, 1) == 0);  // absorbing zero at index 0
  CHECK(S.label(0) == "zero");
}

TEST_CASE("axiom violations surface as DomainError") {
  // left-zero band plus a zero row/column is still not an inverse semigroup
  std::string bad = "3\n0 0 0\n0 1 1\n0 2 2\n";
  CHECK_THROWS_AS(load_semigroup_text(bad), DomainError);
}

TEST_CASE("labels are parsed") {
  std::string text = "2\n0 0\n0 1\nlabel 1 e\n";
  auto S = load_semigroup_text(text);
  CHECK(S.label(1) == "e");
  CHECK(S.label(0) == "0");
}

TEST_CASE("dot output for brandt(2) proper filters") {
  auto B2 = brandt(2);
  auto E = idempotents(B2);
  auto FG = build_filter_groupoid(B2, E, FilterKind::proper);
  auto dot = emit_dot(FG.g);
  // two unit nodes, two non-unit edges
  CHECK(dot.find("u0 [shape=circle label=\"{e11}\"]") != std::string::npos);
  CHECK(dot.find("u1 [shape=circle label=\"{e22}\"]") != std::string::npos);
  CHECK(dot.find("label=\"{e12}\"") != std::string::npos);
  CHECK(dot.find("label=\"{e21}\"") != std::string::npos);
  // determinism
  CHECK(emit_dot(FG.g) == dot);
}

TEST_CASE("dot output for the empty groupoid") {
  std::vector<int> trivial = {0};
  auto S = *validate_inverse_semigroup(1, trivial).semigroup;
  auto E = idempotents(S);
  auto FG = build_filter_groupoid(S, E, FilterKind::proper);
  auto dot = emit_dot(FG.g);
  CHECK(dot.find("->") == std::string::npos);  // no edges at all
}

TEST_CASE("json outputs have the schema fields and are deterministic") {
  auto B2 = brandt(2);
  auto E = idempotents(B2);
  auto FG = build_filter_groupoid(B2, E, FilterKind::proper);
  auto gj = emit_groupoid_json(FG.g, "brandt:2");
  CHECK(gj.find("\"schema_version\": 1") != std::string::npos);
  CHECK(gj.find("\"instance\": \"brandt:2\"") != std::string::npos);
  CHECK(gj.find("\"arrows\"") != std::string::npos);
  CHECK(emit_groupoid_json(FG.g, "brandt:2") == gj);

  auto report = verify_all(B2);
  report.instance = "brandt:2";
  auto rj = emit_report_json(report);
  CHECK(rj.find("\"claims\"") != std::string::npos);
  CHECK(rj.find("\"overall\": \"pass\"") != std::string::npos);
  // two runs serialize identically (no timings in the payload)
  auto report2 = verify_all(B2);
  report2.instance = "brandt:2";
  CHECK(emit_report_json(report2) == rj);
}
