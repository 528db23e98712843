#pragma once

#include <cstdint>
#include <vector>

#include "chowtower/poly.hpp"
#include "chowtower/threefold.hpp"

namespace chowtower {

/// Basis names on the scroll.
inline constexpr const char* kTau = "tau";
inline constexpr const char* kC0 = "C0";
inline constexpr const char* kF = "F";

/// X = P(O + O(-A)) over F_m with A = x*C0 + y*F. The main tower uses
/// x = 2, y = -1 over F_n.
struct BundleSpec {
  std::int64_t x = 2;
  std::int64_t y = -1;
  IntPoly base_index = IntPoly::n();

  bool main_case() const { return x == 2 && y == -1; }
  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;
};

/// A = x*C0 + y*F pulled back to the scroll.
DivClass bundle_A(const BundleSpec& spec);

/// Basis (tau, C0, F), the triple form from tau^2 = c1(V)*tau, Chern data, and
/// for the main case the surfaces T (tau), R (tau + A), U (C0).
/// Throws DomainError if x < 0.
ThreefoldModel build_scroll(const BundleSpec& spec);

/// Numeric coefficients (a, b, c) of a*tau + b*C0 + c*F.
struct ScrollDegrees {
  std::int64_t a = 0, b = 0, c = 0;
  friend bool operator==(const ScrollDegrees&, const ScrollDegrees&) = default;
};

/// Evaluates a scroll divisor at n = n0. Throws BasisError for non-scroll terms.
ScrollDegrees scroll_degrees(const DivClass& d, std::int64_t n0);

/// h^0(X, O(a*tau + b*C0 + c*F)) at n = n0, via the pushforward
/// H^0 = sum over r = 0..a of H^0(S, (b - r*x)*C0 + (c - r*y)*F).
std::int64_t h0_scroll(const BundleSpec& spec, std::int64_t n0, ScrollDegrees d);
std::int64_t h0_scroll(const BundleSpec& spec, std::int64_t n0, const DivClass& d);

struct Effectivity {
  bool effective = false;
  /// For y < 0: every r with (b, c) in S_r, i.e. b >= r*x and c >= r*y.
  std::vector<std::int64_t> witnesses;
};

Effectivity is_effective(const BundleSpec& spec, std::int64_t n0, ScrollDegrees d);

/// {tau, C0, tau + A}, each confirmed rigid (h^0 = 1) at every n of the sample.
/// Throws DomainError when y >= 0, where the classification is not available.
std::vector<DivClass> rigid_primes(const BundleSpec& spec, NRange sample = {1, 20});

}  // namespace chowtower
