#include "chowtower/surface.hpp"
#include "chowtower/sweep.hpp"

namespace chowtower::reference {

std::vector<FiltrationReport> sweep_filtration(const FiltrationPlan& plan, NRange range) {
  std::vector<FiltrationReport> out;
  out.reserve(static_cast<std::size_t>(range.size()));
  for (std::int64_t n0 = range.lo; n0 <= range.hi; ++n0) {
    out.push_back(evaluate_filtration(plan, n0));
  }
  return out;
}

std::vector<std::int64_t> h0_surface_grid(const Grid3& grid) {
  std::vector<std::int64_t> out;
  out.reserve(grid.size());
  for (std::int64_t m = grid.lo[0]; m <= grid.hi[0]; ++m) {
    for (std::int64_t a = grid.lo[1]; a <= grid.hi[1]; ++a) {
      for (std::int64_t b = grid.lo[2]; b <= grid.hi[2]; ++b) out.push_back(h0(m, a, b));
    }
  }
  return out;
}

std::vector<std::int64_t> h0_scroll_grid(const BundleSpec& spec, std::int64_t n0,
                                         const Grid3& grid) {
  std::vector<std::int64_t> out;
  out.reserve(grid.size());
  for (std::int64_t a = grid.lo[0]; a <= grid.hi[0]; ++a) {
    for (std::int64_t b = grid.lo[1]; b <= grid.hi[1]; ++b) {
      for (std::int64_t c = grid.lo[2]; c <= grid.hi[2]; ++c) {
        out.push_back(h0_scroll(spec, n0, {a, b, c}));
      }
    }
  }
  return out;
}

}  // namespace chowtower::reference
