#include <doctest.h>

#include <random>

#include "chowtower/cover.hpp"
#include "chowtower/error.hpp"
#include "paper_tower.hpp"

using namespace chowtower;
using fixture::D;

TEST_CASE("paper cover") {
  const auto& t = fixture::paper();
  CHECK(t.cover.branch_euler == IntPoly::linear(28, 78));
  CHECK(t.cover.euler == IntPoly::linear(-28, -54));
  CHECK(t.cover.canonical_pullback == -D("E2"));
  CHECK(IntPoly(2) * t.cover.half == IntPoly(1) * t.cover.branch);
  CHECK(t.cover.half + t.cover.half == t.cover.branch);
}

TEST_CASE("Riemann-Roch: chi(O_Y) = 1") {
  // chi(O_Y) = chi(O_X) + chi(-L) with L = B/2; Hirzebruch-Riemann-Roch gives
  // 12 chi(D) = 2D^3 - 3K.D^2 + (K^2 + c2).D + 12 chi(O_X).
  const auto& t = fixture::paper();
  const DivClass d = IntPoly(-1) * t.cover.half;
  const DivClass k = t.x2.canonical();
  const IntPoly twelve_chi = IntPoly(2) * triple_product(t.x2, d, d, d) -
                             IntPoly(3) * triple_product(t.x2, k, d, d) +
                             triple_product(t.x2, k, k, d) + integrate_c2(t.x2, d) + IntPoly(12);
  CHECK(twelve_chi.is_zero());
}

TEST_CASE("branch -2K - 2E2 expands to the same class") {
  const auto& t = fixture::paper();
  CHECK(IntPoly(-2) * t.x2.canonical() - IntPoly(2) * D("E2") == t.branch);
}

TEST_CASE("trivial and odd branch") {
  const auto& t = fixture::paper();
  const CoverModel unbranched = double_cover(t.x2, DivClass());
  CHECK(unbranched.euler == IntPoly(24));
  CHECK(unbranched.canonical_pullback == t.x2.canonical());
  CHECK_THROWS_AS(double_cover(t.x2, D("E2")), DomainError);
  CHECK_THROWS_WITH_AS(double_cover(t.x2, D("F") + D("F") + D("tau")),
                       doctest::Contains("not 2-divisible"), DomainError);
}

TEST_CASE("euler of a cover is 2 e(T) - e(B) for random even branch classes") {
  const auto& t = fixture::paper();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> c(-4, 4);
  for (int i = 0; i < 100; ++i) {
    DivClass half;
    for (const auto& b : t.x2.basis()) half.set(b, IntPoly{c(rng), c(rng)});
    const DivClass branch = IntPoly(2) * half;
    const CoverModel cm = double_cover(t.x2, branch);
    // Independent expansion of e(B) = (c2 - c1 B + B^2) B.
    const IntPoly eb = integrate_c2(t.x2, branch) - triple_product(t.x2, t.x2.c1(), branch, branch) +
                       triple_product(t.x2, branch, branch, branch);
    REQUIRE(cm.euler == IntPoly(2) * t.x2.euler() - eb);
    REQUIRE(cm.half == half);
  }
}

TEST_CASE("log Calabi-Yau") {
  const auto& t = fixture::paper();
  const LogCYReport ok = verify_log_cy(t.cover, D("E2"));
  CHECK(ok.verdict == Verdict::Pass);
  CHECK(ok.residual.is_zero());
  const LogCYReport e1 = verify_log_cy(t.cover, D("E1"));
  CHECK(e1.verdict == Verdict::Fail);
  CHECK(e1.residual == D("E1") - D("E2"));
  const LogCYReport twice = verify_log_cy(t.cover, IntPoly(2) * D("E2"));
  CHECK(twice.verdict == Verdict::Fail);
  CHECK(twice.residual == D("E2"));
  const DivClass d = -t.cover.canonical_pullback;
  for (const auto& b : t.x2.basis()) {
    CHECK(verify_log_cy(t.cover, d + D(b)).verdict == Verdict::Fail);
    CHECK(verify_log_cy(t.cover, d - D(b)).verdict == Verdict::Fail);
  }
  CHECK_THROWS_AS(verify_log_cy(t.cover, D("E9")), BasisError);
}

TEST_CASE("K3 certificate") {
  const auto& t = fixture::paper();
  const K3Report k = k3_check(t.cover, "E2");
  CHECK(k.branch_restriction.to_string() == "4*g + 6*f");
  CHECK(k.is_bianticanonical);
  REQUIRE(k.genus);
  CHECK(*k.genus == IntPoly(9));
  REQUIRE(k.euler);
  CHECK(*k.euler == IntPoly(24));
  CHECK(k.fixed_mult == std::optional<std::int64_t>(0));
  CHECK(k.verdict == Verdict::Pass);

  const CoverModel unbranched = double_cover(t.x2, DivClass());
  const K3Report z = k3_check(unbranched, "E2");
  CHECK_FALSE(z.is_bianticanonical);
  CHECK(z.verdict == Verdict::Fail);

  // Other exceptional surface: not bianticanonical there.
  CHECK(k3_check(t.cover, "E1").verdict == Verdict::Fail);
  CHECK_THROWS_AS(k3_check(t.cover, "Q"), BasisError);
}

TEST_CASE("K3 verdict needs the bianticanonical restriction even when e = 24") {
  // On E2 = F_1, 2g + 11f has genus 9 (C^2 = 40, C.K = -24) but is not -2K. No even
  // class restricts to it, so the branch is planted directly into the cover data.
  const auto& t = fixture::paper();
  const EmbeddedSurface& e2 = t.x2.surface("E2");
  const SurfacePicClass target = pic_class(e2.model, 2, 11);
  CHECK(genus(e2.model, target) == IntPoly(9));
  // E2 restricts to -g - (n+1)f and F to f, so -2E2 + (9-2n)F restricts to 2g + 11f.
  const std::optional<DivClass> branch = IntPoly(-2) * D("E2") + IntPoly::linear(-2, 9) * D("F");
  REQUIRE(restrict(e2, *branch) == target);
  CoverModel planted = t.cover;
  planted.branch = *branch;
  const K3Report k = k3_check(planted, "E2");
  REQUIRE(k.euler);
  CHECK(*k.euler == IntPoly(24));
  CHECK_FALSE(k.is_bianticanonical);
  CHECK(k.verdict == Verdict::Fail);
}

TEST_CASE("Kodaira sign") {
  const auto& t = fixture::paper();
  const KodairaReport k = kodaira_sign_check(t.cover);
  CHECK(k.verdict == Verdict::Pass);
  CHECK(k.minus_canonical == D("E2"));

  const CoverModel cy = double_cover(t.x2, IntPoly(-2) * t.x2.canonical());
  const KodairaReport z = kodaira_sign_check(cy);
  CHECK(z.verdict == Verdict::Pass);
  CHECK(z.note.find("Calabi-Yau") != std::string::npos);

  // canonical_pullback = F - E2, so -K = E2 - F: not a nonnegative combination.
  const DivClass b = IntPoly(-2) * t.x2.canonical() + IntPoly(2) * D("F") - IntPoly(2) * D("E2");
  const CoverModel odd = double_cover(t.x2, b);
  CHECK(odd.canonical_pullback == D("F") - D("E2"));
  CHECK(kodaira_sign_check(odd).verdict == Verdict::Inconclusive);

  // -K = E1 - E2 is the class of the strict transform of E1: effective through a surface.
  const DivClass b2 = IntPoly(-2) * t.x2.canonical() - IntPoly(2) * (D("E1") - D("E2"));
  const KodairaReport s = kodaira_sign_check(double_cover(t.x2, b2));
  CHECK(s.verdict == Verdict::Pass);
  CHECK_FALSE(s.surface_terms.empty());
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::Pass) == "PASS");
  CHECK(to_string(Verdict::Fail) == "FAIL");
  CHECK(to_string(Verdict::Inconclusive) == "INCONCLUSIVE");
}
