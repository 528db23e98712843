#include "chowtower/sweep.hpp"

#ifdef CHOWTOWER_HAVE_OPENMP
#include <omp.h>
#endif

#include "chowtower/surface.hpp"

namespace chowtower {

int sweep_threads() {
#ifdef CHOWTOWER_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<FiltrationReport> sweep_filtration(const FiltrationPlan& plan, NRange range) {
  const std::int64_t count = range.size();
  std::vector<FiltrationReport> out(static_cast<std::size_t>(count));
  // Each n writes its own slot; the result is identical to the serial sweep.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = evaluate_filtration(plan, range.lo + i);
  }
  return out;
}

std::vector<std::int64_t> h0_surface_grid(const Grid3& grid) {
  std::vector<std::int64_t> out(grid.size());
  const std::int64_t e0 = grid.extent(0), e1 = grid.extent(1), e2 = grid.extent(2);
#pragma omp parallel for collapse(2) schedule(static)
  for (std::int64_t i = 0; i < e0; ++i) {
    for (std::int64_t j = 0; j < e1; ++j) {
      for (std::int64_t k = 0; k < e2; ++k) {
        const std::int64_t m = grid.lo[0] + i, a = grid.lo[1] + j, b = grid.lo[2] + k;
        out[grid.offset(m, a, b)] = h0(m, a, b);
      }
    }
  }
  return out;
}

std::vector<std::int64_t> h0_scroll_grid(const BundleSpec& spec, std::int64_t n0,
                                         const Grid3& grid) {
  std::vector<std::int64_t> out(grid.size());
  const std::int64_t e0 = grid.extent(0), e1 = grid.extent(1), e2 = grid.extent(2);
#pragma omp parallel for collapse(2) schedule(static)
  for (std::int64_t i = 0; i < e0; ++i) {
    for (std::int64_t j = 0; j < e1; ++j) {
      for (std::int64_t k = 0; k < e2; ++k) {
        const ScrollDegrees d{grid.lo[0] + i, grid.lo[1] + j, grid.lo[2] + k};
        out[grid.offset(d.a, d.b, d.c)] = h0_scroll(spec, n0, d);
      }
    }
  }
  return out;
}

}  // namespace chowtower
