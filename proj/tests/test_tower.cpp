#include <doctest.h>

#include <fstream>
#include <sstream>

#include "chowtower/error.hpp"
#include "chowtower/expr.hpp"
#include "chowtower/tower.hpp"
#include "paper_tower.hpp"

using namespace chowtower;
using fixture::D;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string paper_text() { return read_file(std::string(CHOWTOWER_DATA_DIR) + "/paper.tower"); }

SymbolResolver scroll_resolver() {
  static const ThreefoldModel x = build_scroll(BundleSpec{});
  return model_resolver(x, bundle_A(BundleSpec{}));
}

ParseError parse_error_of(const std::string& text) {
  try {
    parse_tower(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("divisor expressions") {
  const auto r = scroll_resolver();
  CHECK(evaluate_divisor("(2n+2)*F", r) == IntPoly::linear(2, 2) * D("F"));
  CHECK(evaluate_divisor("-2*K", r) == fixture::minus_2k_x());
  CHECK(evaluate_divisor("4(tau+A) + (2n+6)*F", r) == fixture::minus_2k_x());
  CHECK(evaluate_divisor("4*(tau + A) + 2n*F + 6F", r) == fixture::minus_2k_x());
  CHECK(evaluate_divisor("0", r).is_zero());
  CHECK(evaluate_divisor("tau - tau", r).is_zero());
  CHECK(evaluate_divisor("n^2*F", r) == IntPoly{0, 0, 1} * D("F"));
  CHECK(evaluate_divisor("-(C0 - F)", r) == D("F") - D("C0"));
  CHECK(evaluate_divisor("tau*3", r) == IntPoly(3) * D("tau"));
  CHECK(evaluate_scalar("3n^2 - 48*n - 46") == IntPoly{-46, -48, 3});
}

TEST_CASE("divisor expression errors carry columns") {
  const auto r = scroll_resolver();
  CHECK_THROWS_AS(evaluate_divisor("tau*tau", r), ParseError);
  CHECK_THROWS_AS(evaluate_divisor("tau + 1", r), ParseError);
  CHECK_THROWS_AS(evaluate_divisor("tau^2", r), ParseError);
  CHECK_THROWS_AS(evaluate_divisor("3", r), ParseError);
  CHECK_THROWS_AS(evaluate_divisor("(tau", r), ParseError);
  CHECK_THROWS_AS(evaluate_divisor("", r), ParseError);
  CHECK_THROWS_AS(evaluate_scalar("n*F"), ParseError);
  try {
    evaluate_divisor("tau + E1", r);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 7);
  }
}

TEST_CASE("the shipped tower parses to the main-case spec") {
  const TowerSpec spec = parse_tower(paper_text());
  CHECK(spec.bundle == BundleSpec{});
  CHECK(spec.base_index.text == "n");
  REQUIRE(spec.blowups.size() == 2);
  CHECK(spec.blowups[0].name == "E1");
  CHECK(spec.blowups[0].divA.text == "tau+A");
  CHECK(spec.blowups[0].divB.text == "C0");
  CHECK(spec.blowups[1].name == "E2");
  REQUIRE(spec.cover);
  CHECK(spec.cover->branch.text == "-2*K - 2*E2");
  CHECK(spec.cover->boundary->text == "E2");
  CHECK(*spec.cover->k3_surface == "E2");
}

TEST_CASE("building the shipped tower matches the API-built tower") {
  const Tower tower = build_tower(parse_tower(paper_text()));
  const auto& ref = fixture::paper();
  REQUIRE(tower.stages.size() == 3);
  CHECK(tower.stages[0] == ref.x);
  CHECK(tower.stages[1] == ref.x1);
  CHECK(tower.stages[2] == ref.x2);
  REQUIRE(tower.cover);
  CHECK(tower.cover->branch == ref.branch);
  CHECK(tower.cover->euler == IntPoly::linear(-28, -54));
  CHECK(tower.boundary == D("E2"));
}

TEST_CASE("K expands to the canonical class of the current stage") {
  const Tower tower = build_tower(parse_tower(paper_text()));
  const DivClass b = tower.divisor("-2*K - 2*E2", 2);
  CHECK(b == tower.divisor("-2*K_X - 2*E1 - 4*E2", 2));
  CHECK(tower.divisor("K", 0) == tower.divisor("K_X", 0));
  CHECK(tower.divisor("K", 1) == tower.divisor("K_X + E1", 1));
  CHECK_THROWS_AS(tower.divisor("E2", 1), ParseError);
  CHECK_THROWS_AS(tower.stage(3), BasisError);
}

TEST_CASE("symbols must be defined at their stage") {
  const ParseError e = parse_error_of(
      "[base]\nindex = \"n\"\n[[blowup]]\ncenter = [\"tau+A\", \"C0\"]\n[bundle]\nx = 2\ny = -1\n");
  CHECK(e.line() == 4);
  CHECK(std::string(e.what()).find("'tau'") != std::string::npos);

  const ParseError e2 = parse_error_of(
      "[base]\nindex = \"n\"\n[bundle]\nx = 2\ny = -1\n"
      "[[blowup]]\ncenter = [\"tau+A\", \"C0\"]\nname = \"E1\"\n"
      "[[blowup]]\ncenter = [\"E1\", \"tau+A-E2\"]\nname = \"E2\"\n");
  CHECK(e2.line() == 10);
  CHECK(e2.column() == 24);

  const ParseError e3 = parse_error_of(
      "[base]\nindex = \"n\"\n[bundle]\nx = 2\ny = -1\n"
      "[[blowup]]\ncenter = [\"tau+A\", \"C0\"]\nname = \"E1\"\n"
      "[cover]\nbranch = \"-2*K - 2*E2\"\n");
  CHECK(e3.line() == 10);
}

TEST_CASE("malformed tower files") {
  CHECK_THROWS_AS(parse_tower("[base]\nindex = n\n[bundle]\nx = 2\ny = -1\n"), ParseError);
  CHECK_THROWS_AS(parse_tower("[base]\nindex = \"n\"\n"), ParseError);
  CHECK_THROWS_AS(parse_tower("[bundle]\nx = 2\n"), ParseError);
  CHECK_THROWS_AS(parse_tower("[bundle]\nx = 2\ny = -1\nz = 3\n"), ParseError);
  CHECK_THROWS_AS(parse_tower("[bundle]\nx = 2\ny = -1\nx = 3\n"), ParseError);
  CHECK_THROWS_AS(parse_tower("[bundle]\nx = two\ny = -1\n"), ParseError);
  CHECK_THROWS_AS(parse_tower("[bundle]\nx = -1\ny = -1\n"), ParseError);
  CHECK_THROWS_AS(parse_tower("[bundle]\nx = 2\ny = -1\n[extra]\n"), ParseError);
  CHECK_THROWS_AS(parse_tower("x = 2\n"), ParseError);
  CHECK_THROWS_AS(parse_tower("[bundle]\nx = 2\ny = -1\n[[blowup]]\nname = \"E1\"\n"), ParseError);
  CHECK_THROWS_AS(parse_tower("[bundle]\nx = 2\ny = -1\n[[blowup]]\ncenter = [\"C0\"]\n"), ParseError);
  CHECK_THROWS_AS(parse_tower("[bundle]\nx = 2\ny = -1\n[[blowup]]\ncenter = [\"C0\", \"tau\"\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_tower("[bundle]\nx = 2\ny = -1\n[[blowup]]\ncenter = [\"C0\", \"tau\"]\nname = \"F\"\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_tower("[bundle]\nx = 2\ny = -1\n[cover]\n"), ParseError);
  CHECK_THROWS_AS(parse_tower("[bundle]\nx = 2\ny = -1\n[cover]\nbranch = \"K\"\n[[blowup]]\n"), ParseError);
}

TEST_CASE("comments, defaults and blank lines") {
  const TowerSpec s = parse_tower(
      "# a tower\n\n[bundle]   # the bundle\nx = 1\ny = 1\n[[blowup]]\ncenter = [\"C0\", \"tau\"]  # no name\n");
  CHECK(s.bundle == BundleSpec{1, 1});
  REQUIRE(s.blowups.size() == 1);
  CHECK(s.blowups[0].name == "E1");
  CHECK_FALSE(s.cover);
}

TEST_CASE("build errors") {
  // odd branch
  CHECK_THROWS_AS(build_tower(parse_tower("[bundle]\nx = 2\ny = -1\n[cover]\nbranch = \"K\"\n")),
                  DomainError);
  // center with fiber degree 0
  CHECK_THROWS_AS(build_tower(parse_tower("[bundle]\nx = 2\ny = -1\n[[blowup]]\ncenter = [\"F\", \"F\"]\n")),
                  CenterError);
}
