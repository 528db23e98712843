#pragma once

#include <cstdint>
#include <string>

#include "chowtower/poly.hpp"

namespace chowtower {

/// The Hirzebruch surface F_m = P(O + O(-m)) over P^1. The index may be
/// symbolic in n. The label distinguishes different embedded copies of the
/// same abstract surface (T and R are both F_n).
struct HirzebruchSurface {
  IntPoly index;
  std::string label;

  friend bool operator==(const HirzebruchSurface&, const HirzebruchSurface&) = default;
};

/// a*g + b*f on a specific Hirzebruch surface, with g the negative section
/// (g^2 = -m) and f a fiber.
class SurfacePicClass {
 public:
  SurfacePicClass(HirzebruchSurface surface, IntPoly a, IntPoly b)
      : surface_(std::move(surface)), a_(std::move(a)), b_(std::move(b)) {}

  const HirzebruchSurface& surface() const { return surface_; }
  const IntPoly& a() const { return a_; }
  const IntPoly& b() const { return b_; }

  SurfacePicClass operator+(const SurfacePicClass& other) const;
  SurfacePicClass operator-(const SurfacePicClass& other) const;
  SurfacePicClass operator-() const;
  SurfacePicClass scaled(const IntPoly& k) const;

  /// "4*g + 6*f", "g + (2n+1)*f", "0".
  std::string to_string() const;

  friend bool operator==(const SurfacePicClass&, const SurfacePicClass&) = default;

 private:
  void require_same(const SurfacePicClass& other) const;

  HirzebruchSurface surface_;
  IntPoly a_;
  IntPoly b_;
};

SurfacePicClass section_class(const HirzebruchSurface& s);  // g
SurfacePicClass fiber_class(const HirzebruchSurface& s);    // f
SurfacePicClass pic_class(const HirzebruchSurface& s, IntPoly a, IntPoly b);

/// -m*aC*aD + aC*bD + aD*bC. Throws SurfaceMismatchError if C or D belong to
/// another surface.
IntPoly intersect(const HirzebruchSurface& s, const SurfacePicClass& c,
                  const SurfacePicClass& d);

/// K = -2g - (m+2)f
SurfacePicClass canonical(const HirzebruchSurface& s);

/// Arithmetic genus 1 + (C^2 + C.K)/2. Throws DomainError if the numerator is odd.
IntPoly genus(const HirzebruchSurface& s, const SurfacePicClass& c);

/// Topological Euler number of a Hirzebruch surface.
std::int64_t euler(const HirzebruchSurface& s);

// Numeric section counting on F_m, m >= 0.
//
// H^0(F_m, a*g + b*f) splits as the sum over k = 0..a of H^0(P^1, O(b - k*m));
// the k-th summand consists of sections vanishing to order a - k along g.

/// h^0(F_m, a*g + b*f); 0 when a < 0.
std::int64_t h0(std::int64_t m, std::int64_t a, std::int64_t b);

struct FixedPart {
  std::int64_t mult = 0;      // multiplicity of g in the fixed part
  std::int64_t moving_a = 0;  // moving part is moving_a*g + moving_b*f
  std::int64_t moving_b = 0;
};

/// Fixed multiple of g in |a*g + b*f|. Throws DomainError on an empty system.
FixedPart fixed_part(std::int64_t m, std::int64_t a, std::int64_t b);

}  // namespace chowtower
