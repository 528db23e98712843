#include <doctest.h>

#include "chowtower/sweep.hpp"
#include "oracles.hpp"

using namespace chowtower;

TEST_CASE("grid indexing") {
  const Grid3 g{{0, -2, 5}, {3, 4, 9}};
  CHECK(g.extent(0) == 4);
  CHECK(g.extent(1) == 7);
  CHECK(g.extent(2) == 5);
  CHECK(g.size() == 140);
  CHECK(g.offset(0, -2, 5) == 0);
  CHECK(g.offset(0, -2, 6) == 1);
  CHECK(g.offset(3, 4, 9) == 139);
}

TEST_CASE("parallel filtration sweep equals the serial reference") {
  const FiltrationPlan plan = plan_filtration(BundleSpec{});
  const NRange range{1, 200};
  const auto par = sweep_filtration(plan, range);
  const auto ser = reference::sweep_filtration(plan, range);
  REQUIRE(par.size() == 200);
  CHECK(par == ser);
  for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i].n0 == static_cast<std::int64_t>(i) + 1);
}

TEST_CASE("parallel surface grid equals the serial reference and the oracle") {
  const Grid3 g{{0, -2, -5}, {10, 15, 30}};
  const auto par = h0_surface_grid(g);
  const auto ser = reference::h0_surface_grid(g);
  REQUIRE(par.size() == g.size());
  CHECK(par == ser);
  for (std::int64_t m = g.lo[0]; m <= g.hi[0]; ++m)
    for (std::int64_t a = g.lo[1]; a <= g.hi[1]; ++a)
      for (std::int64_t b = g.lo[2]; b <= g.hi[2]; ++b)
        REQUIRE(par[g.offset(m, a, b)] == oracle::surface_h0(m, a, b));
}

TEST_CASE("parallel scroll grid equals the serial reference and the oracle") {
  const Grid3 g{{-1, -2, -6}, {6, 12, 20}};
  for (std::int64_t n0 : {1, 4, 9}) {
    const auto par = h0_scroll_grid(BundleSpec{}, n0, g);
    const auto ser = reference::h0_scroll_grid(BundleSpec{}, n0, g);
    REQUIRE(par.size() == g.size());
    CHECK(par == ser);
    for (std::int64_t a = g.lo[0]; a <= g.hi[0]; ++a)
      for (std::int64_t b = g.lo[1]; b <= g.hi[1]; ++b)
        for (std::int64_t c = g.lo[2]; c <= g.hi[2]; ++c)
          REQUIRE(par[g.offset(a, b, c)] == oracle::scroll_h0(2, -1, n0, a, b, c));
  }
}

TEST_CASE("empty range") {
  const FiltrationPlan plan = plan_filtration(BundleSpec{});
  CHECK(sweep_filtration(plan, NRange{5, 4}).empty());
  CHECK(reference::sweep_filtration(plan, NRange{5, 4}).empty());
}

TEST_CASE("thread count") { CHECK(sweep_threads() >= 1); }
