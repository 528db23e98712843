#include "chowtower/bundle.hpp"

#include "chowtower/error.hpp"
#include "chowtower/surface.hpp"

namespace chowtower {

namespace {

// Intersection on the base F_m of classes written as (C0, F) coefficients.
struct BaseClass {
  IntPoly c0, f;
};

IntPoly base_dot(const IntPoly& m, const BaseClass& p, const BaseClass& q) {
  return -(m * p.c0 * q.c0) + p.c0 * q.f + q.c0 * p.f;
}

}  // namespace

DivClass bundle_A(const BundleSpec& spec) {
  return DivClass{{kC0, spec.x}, {kF, spec.y}};
}

ThreefoldModel build_scroll(const BundleSpec& spec) {
  if (spec.x < 0) throw DomainError("bundle requires x >= 0");
  const IntPoly& m = spec.base_index;
  const BaseClass c1V{-spec.x, -spec.y};
  const BaseClass c1S{2, m + IntPoly(2)};
  const BaseClass C0{1, 0};
  const BaseClass F{0, 1};

  // tau = 0, C0 = 1, F = 2.
  TripleForm t(3);
  t.set(0, 0, 0, base_dot(m, c1V, c1V));
  t.set(0, 0, 1, base_dot(m, c1V, C0));
  t.set(0, 0, 2, base_dot(m, c1V, F));
  t.set(0, 1, 1, base_dot(m, C0, C0));
  t.set(0, 1, 2, base_dot(m, C0, F));
  t.set(0, 2, 2, base_dot(m, F, F));

  const DivClass c1{{kTau, 2}, {kC0, c1S.c0 - c1V.c0}, {kF, c1S.f - c1V.f}};

  // c2 = (c2(S) - c1(V)c1(S)) + 2 c1(S) tau; the base zero-cycle is a multiple
  // of the point class C0*F.
  Cycle2 c2;
  c2.add(kC0, kF, IntPoly(4) - base_dot(m, c1V, c1S));
  c2.add(kTau, kC0, IntPoly(2) * c1S.c0);
  c2.add(kTau, kF, IntPoly(2) * c1S.f);

  const IntPoly euler = IntPoly(2 * 4) * t.get(0, 1, 2);

  std::vector<EmbeddedSurface> surfaces;
  if (spec.main_case()) {
    const HirzebruchSurface T{m, "T"};
    const HirzebruchSurface R{m, "R"};
    const HirzebruchSurface U{IntPoly(2) * m + IntPoly(1), "U"};
    surfaces.push_back({"T",
                        DivClass::basis(kTau),
                        T,
                        {{kTau, pic_class(T, c1V.c0, c1V.f)},
                         {kC0, section_class(T)},
                         {kF, fiber_class(T)}},
                        "given"});
    surfaces.push_back({"R",
                        DivClass::basis(kTau) + bundle_A(spec),
                        R,
                        {{kTau, pic_class(R, 0, 0)},
                         {kC0, section_class(R)},
                         {kF, fiber_class(R)}},
                        "given"});
    surfaces.push_back({"U",
                        DivClass::basis(kC0),
                        U,
                        {{kTau, pic_class(U, 1, U.index)},
                         {kC0, pic_class(U, 0, -m)},
                         {kF, fiber_class(U)}},
                        "given"});
  }

  return ThreefoldModel("X", {kTau, kC0, kF}, std::move(t), c1, std::move(c2), euler,
                        std::move(surfaces));
}

ScrollDegrees scroll_degrees(const DivClass& d, std::int64_t n0) {
  for (const auto& [name, value] : d.terms()) {
    if (name != kTau && name != kC0 && name != kF) {
      throw BasisError("'" + name + "' is not a divisor of the scroll");
    }
  }
  return {d.coeff(kTau).eval_at(n0), d.coeff(kC0).eval_at(n0), d.coeff(kF).eval_at(n0)};
}

std::int64_t h0_scroll(const BundleSpec& spec, std::int64_t n0, ScrollDegrees d) {
  if (d.a < 0) return 0;
  const std::int64_t m0 = spec.base_index.eval_at(n0);
  std::int64_t total = 0;
  for (std::int64_t r = 0; r <= d.a; ++r) {
    total += h0(m0, d.b - r * spec.x, d.c - r * spec.y);
  }
  return total;
}

std::int64_t h0_scroll(const BundleSpec& spec, std::int64_t n0, const DivClass& d) {
  return h0_scroll(spec, n0, scroll_degrees(d, n0));
}

Effectivity is_effective(const BundleSpec& spec, std::int64_t n0, ScrollDegrees d) {
  Effectivity out;
  out.effective = h0_scroll(spec, n0, d) > 0;
  if (spec.y < 0) {
    for (std::int64_t r = 0; r <= d.a; ++r) {
      if (d.b >= r * spec.x && d.c >= r * spec.y) out.witnesses.push_back(r);
    }
  }
  return out;
}

std::vector<DivClass> rigid_primes(const BundleSpec& spec, NRange sample) {
  if (spec.y >= 0) {
    throw DomainError("rigid-prime classification is only established for y < 0");
  }
  std::vector<DivClass> out{DivClass::basis(kTau), DivClass::basis(kC0),
                            DivClass::basis(kTau) + bundle_A(spec)};
  for (const auto& d : out) {
    for (std::int64_t n0 = sample.lo; n0 <= sample.hi; ++n0) {
      if (h0_scroll(spec, n0, d) != 1) {
        throw DomainError("expected rigid class has h0 != 1 at n = " + std::to_string(n0));
      }
    }
  }
  return out;
}

}  // namespace chowtower
