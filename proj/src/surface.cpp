#include "chowtower/surface.hpp"

#include <algorithm>

#include "chowtower/error.hpp"

namespace chowtower {

namespace {

void require_on(const HirzebruchSurface& s, const SurfacePicClass& c) {
  if (c.surface() != s) {
    throw SurfaceMismatchError("class on surface '" + c.surface().label + "' (F_" +
                               c.surface().index.to_compact_string() +
                               ") used on surface '" + s.label + "' (F_" +
                               s.index.to_compact_string() + ")");
  }
}

std::string coefficient_term(const IntPoly& k, const char* symbol, bool first) {
  std::string out;
  IntPoly mag = k;
  if (auto c = k.constant_value()) {
    if (*c < 0) {
      out += first ? "-" : " - ";
      mag = -k;
    } else if (!first) {
      out += " + ";
    }
    if (mag != IntPoly(1)) out += mag.to_string() + "*";
  } else {
    if (!first) out += " + ";
    out += "(" + k.to_compact_string() + ")*";
  }
  return out + symbol;
}

}  // namespace

void SurfacePicClass::require_same(const SurfacePicClass& other) const {
  require_on(surface_, other);
}

SurfacePicClass SurfacePicClass::operator+(const SurfacePicClass& other) const {
  require_same(other);
  return {surface_, a_ + other.a_, b_ + other.b_};
}

SurfacePicClass SurfacePicClass::operator-(const SurfacePicClass& other) const {
  require_same(other);
  return {surface_, a_ - other.a_, b_ - other.b_};
}

SurfacePicClass SurfacePicClass::operator-() const { return {surface_, -a_, -b_}; }

SurfacePicClass SurfacePicClass::scaled(const IntPoly& k) const {
  return {surface_, a_ * k, b_ * k};
}

std::string SurfacePicClass::to_string() const {
  if (a_.is_zero() && b_.is_zero()) return "0";
  std::string out;
  if (!a_.is_zero()) out += coefficient_term(a_, "g", true);
  if (!b_.is_zero()) out += coefficient_term(b_, "f", out.empty());
  return out;
}

SurfacePicClass section_class(const HirzebruchSurface& s) { return {s, 1, 0}; }
SurfacePicClass fiber_class(const HirzebruchSurface& s) { return {s, 0, 1}; }
SurfacePicClass pic_class(const HirzebruchSurface& s, IntPoly a, IntPoly b) {
  return {s, std::move(a), std::move(b)};
}

IntPoly intersect(const HirzebruchSurface& s, const SurfacePicClass& c,
                  const SurfacePicClass& d) {
  require_on(s, c);
  require_on(s, d);
  return -(s.index * c.a() * d.a()) + c.a() * d.b() + d.a() * c.b();
}

SurfacePicClass canonical(const HirzebruchSurface& s) {
  return {s, -2, -(s.index + IntPoly(2))};
}

IntPoly genus(const HirzebruchSurface& s, const SurfacePicClass& c) {
  const IntPoly numerator = intersect(s, c, c) + intersect(s, c, canonical(s));
  if (!numerator.divisible_by(2)) {
    throw DomainError("adjunction numerator " + numerator.to_string() + " of " +
                      c.to_string() + " is odd");
  }
  return IntPoly(1) + numerator.exact_div(2);
}

std::int64_t euler(const HirzebruchSurface&) { return 4; }

std::int64_t h0(std::int64_t m, std::int64_t a, std::int64_t b) {
  if (m < 0) throw DomainError("Hirzebruch index must be nonnegative");
  std::int64_t total = 0;
  for (std::int64_t k = 0; k <= a; ++k) {
    const std::int64_t deg = b - k * m;
    if (deg < 0) {
      if (m > 0) break;  // later summands only get more negative
      continue;
    }
    total += deg + 1;
  }
  return total;
}

FixedPart fixed_part(std::int64_t m, std::int64_t a, std::int64_t b) {
  if (h0(m, a, b) == 0) {
    throw DomainError("empty linear system |" + std::to_string(a) + "g + " +
                      std::to_string(b) + "f| on F_" + std::to_string(m));
  }
  std::int64_t k_max = 0;
  for (std::int64_t k = 0; k <= a; ++k) {
    if (b - k * m + 1 > 0) k_max = k;
  }
  const std::int64_t mult = a - k_max;
  return {mult, a - mult, b};
}

}  // namespace chowtower
