#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chowtower/bundle.hpp"
#include "chowtower/linsys.hpp"
#include "chowtower/poly.hpp"

// Data-parallel kernels over n and over lattice grids. The OpenMP versions
// live in sweep.cpp; the serial versions in namespace reference (sweep_ref.cpp)
// are the ground truth used by the tests and the benchmark.
namespace chowtower {

/// Inclusive box of (m, a, b) for surface h^0, or (a, b, c) for scroll h^0.
struct Grid3 {
  std::int64_t lo[3] = {0, 0, 0};
  std::int64_t hi[3] = {0, 0, 0};

  std::int64_t extent(int axis) const { return hi[axis] - lo[axis] + 1; }
  std::size_t size() const {
    return static_cast<std::size_t>(extent(0) * extent(1) * extent(2));
  }
  /// Row-major with the last axis fastest.
  std::size_t offset(std::int64_t u, std::int64_t v, std::int64_t w) const {
    return static_cast<std::size_t>(((u - lo[0]) * extent(1) + (v - lo[1])) * extent(2) +
                                    (w - lo[2]));
  }
};

std::vector<FiltrationReport> sweep_filtration(const FiltrationPlan& plan, NRange range);

/// h0(m, a, b) for every point of the grid, axes (m, a, b).
std::vector<std::int64_t> h0_surface_grid(const Grid3& grid);

/// h0_scroll(spec, n0, (a, b, c)) for every point of the grid, axes (a, b, c).
std::vector<std::int64_t> h0_scroll_grid(const BundleSpec& spec, std::int64_t n0,
                                         const Grid3& grid);

/// Number of threads the parallel kernels will use (1 without OpenMP).
int sweep_threads();

namespace reference {

std::vector<FiltrationReport> sweep_filtration(const FiltrationPlan& plan, NRange range);
std::vector<std::int64_t> h0_surface_grid(const Grid3& grid);
std::vector<std::int64_t> h0_scroll_grid(const BundleSpec& spec, std::int64_t n0,
                                         const Grid3& grid);

}  // namespace reference

}  // namespace chowtower
