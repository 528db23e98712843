#include <doctest.h>

#include "chowtower/blowup.hpp"
#include "chowtower/error.hpp"
#include "paper_tower.hpp"

using namespace chowtower;
using fixture::D;

TEST_CASE("centers") {
  const auto& t = fixture::paper();
  CHECK(t.sigma.degA == IntPoly::linear(-2, -1));  // (tau+A)^2 . C0
  CHECK(t.sigma.degB == -IntPoly::n());            // (tau+A) . C0^2
  CHECK(t.sigma.normal_degree() == IntPoly::linear(-3, -1));
  // Swapping the divisors swaps the degrees.
  const CICenter swapped = center(t.x, D("C0"), D("tau") + t.a);
  CHECK(swapped.degA == -IntPoly::n());
  CHECK(swapped.degB == IntPoly::linear(-2, -1));
  CHECK(t.gamma1.degA == -IntPoly::n());
  CHECK(t.gamma1.degB == IntPoly::linear(-1, -1));
  CHECK(t.sigma.curve_class() == Cycle2::product(D("tau") + t.a, D("C0")));
}

TEST_CASE("unsupported centers") {
  const auto& t = fixture::paper();
  CHECK_THROWS_AS(center(t.x, D("F"), D("F")), CenterError);
  CHECK_THROWS_AS(center(t.x, D("tau"), D("tau")), CenterError);
}

TEST_CASE("first blow-up") {
  const auto& t = fixture::paper();
  const ThreefoldModel& x1 = t.x1;
  CHECK(x1.name() == "X1");
  CHECK(x1.basis() == Basis{"tau", "C0", "F", "E1"});
  for (const auto& a : t.x.basis()) CHECK(triple_product(x1, D("E1"), D("tau"), D(a)).is_zero());
  CHECK(triple_product(x1, D("E1"), D("C0"), D("F")).is_zero());
  CHECK(triple_product(x1, D("E1"), D("E1"), D("C0")) == IntPoly::n());
  CHECK(triple_product(x1, D("E1"), D("E1"), D("F")) == IntPoly(-1));
  CHECK(triple_product(x1, D("E1"), D("E1"), D("E1")) == IntPoly::linear(3, 1));
  CHECK(x1.euler() == IntPoly(10));
  CHECK(x1.c1() == t.x.c1() - D("E1"));
  const Cycle2 c2 = t.x.c2() + Cycle2::product(D("tau") + t.a, D("C0")) - Cycle2::product(t.x.c1(), D("E1"));
  CHECK(x1.c2() == c2);
}

TEST_CASE("second blow-up") {
  const auto& t = fixture::paper();
  const ThreefoldModel& x2 = t.x2;
  CHECK(x2.name() == "X2");
  CHECK(triple_product(x2, D("E2"), D("tau"), D("tau")).is_zero());
  CHECK(triple_product(x2, D("E2"), D("C0"), D("F")).is_zero());
  CHECK(triple_product(x2, D("E2"), D("E1"), D("C0")).is_zero());
  CHECK(triple_product(x2, D("E2"), D("E1"), D("F")).is_zero());
  CHECK(triple_product(x2, D("E2"), D("E1"), D("E1")).is_zero());
  CHECK(triple_product(x2, D("E2"), D("E2"), D("C0")) == IntPoly::n());
  CHECK(triple_product(x2, D("E2"), D("E2"), D("F")) == IntPoly(-1));
  CHECK(triple_product(x2, D("E2"), D("E2"), D("E1")) == IntPoly::n());
  CHECK(triple_product(x2, D("E2"), D("E2"), D("E2")) == IntPoly::linear(2, 1));
  CHECK(x2.euler() == IntPoly(12));
  const Cycle2 c2 = t.x1.c2() + Cycle2::product(D("tau") + t.a - D("E1"), D("E1")) -
                    Cycle2::product(t.x1.c1(), D("E2"));
  CHECK(x2.c2() == c2);
}

TEST_CASE("tensor extension follows the three rules for every triple with E") {
  const auto& t = fixture::paper();
  const std::pair<const ThreefoldModel*, const ThreefoldModel*> steps[] = {{&t.x, &t.x1}, {&t.x1, &t.x2}};
  const CICenter* centers[] = {&t.sigma, &t.gamma1};
  const char* names[] = {"E1", "E2"};
  for (int s = 0; s < 2; ++s) {
    const ThreefoldModel& before = *steps[s].first;
    const ThreefoldModel& after = *steps[s].second;
    const CICenter& c = *centers[s];
    const DivClass e = D(names[s]);
    for (const auto& a : before.basis()) {
      for (const auto& b : before.basis()) {
        REQUIRE(triple_product(after, e, D(a), D(b)).is_zero());
        for (const auto& c3 : before.basis()) {
          REQUIRE(triple_product(after, D(a), D(b), D(c3)) == triple_product(before, D(a), D(b), D(c3)));
        }
      }
      REQUIRE(triple_product(after, e, e, D(a)) == -triple_product(before, D(a), c.divA, c.divB));
    }
    REQUIRE(triple_product(after, e, e, e) == -(c.degA + c.degB));
    CHECK(after.euler() - before.euler() == IntPoly(2));
  }
}

TEST_CASE("exceptional surfaces") {
  const auto& t = fixture::paper();
  const EmbeddedSurface& e1 = t.x1.surface("E1");
  CHECK(e1.model.index == IntPoly::linear(1, 1));
  CHECK(e1.provenance == "exceptional");
  // g = -E1| - (2n+1)F| on E1
  const SurfacePicClass g1 = restrict(e1, -D("E1") - IntPoly::linear(2, 1) * D("F"));
  CHECK(g1 == section_class(e1.model));
  const EmbeddedSurface& e2 = t.x2.surface("E2");
  CHECK(e2.model.index == IntPoly(1));
  const SurfacePicClass g2 = restrict(e2, -D("E2") - IntPoly::linear(1, 1) * D("F"));
  CHECK(g2 == section_class(e2.model));
  CHECK(restrict(e2, t.branch) == pic_class(e2.model, 4, 6));
  CHECK(restrict(e2, D("F")) == fiber_class(e2.model));
}

TEST_CASE("surfaces are carried across blow-ups") {
  const auto& t = fixture::paper();
  CHECK(t.x1.surface("R").cls == D("tau") + t.a - D("E1"));
  CHECK(t.x1.surface("U").cls == D("C0") - D("E1"));
  CHECK(t.x1.surface("T").cls == D("tau"));
  CHECK(t.x1.surface("R").provenance == "strict transform");
  CHECK(t.x1.surface("T").provenance == "pullback");
  CHECK(t.x2.surface("R").cls == D("tau") + t.a - D("E1") - D("E2"));
  CHECK(t.x2.surface("E1").cls == D("E1") - D("E2"));
  CHECK(t.x2.surface("U").cls == D("C0") - D("E1"));
}

TEST_CASE("blow-up refuses an existing name and a sign change") {
  const auto& t = fixture::paper();
  CHECK_THROWS_AS(blow_up(t.x1, t.gamma1, "E1"), BasisError);
  // degA - degB = n - 10 changes sign inside the working range.
  const CICenter c{D("tau") + t.a, D("C0"), IntPoly::linear(1, -10), IntPoly(0), true};
  CHECK_THROWS_AS(blow_up(t.x, c, "E1", NRange{1, 60}), DomainError);
}
