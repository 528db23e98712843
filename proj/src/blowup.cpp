#include "chowtower/blowup.hpp"

#include <optional>

#include "chowtower/bundle.hpp"
#include "chowtower/error.hpp"

namespace chowtower {

CICenter center(const ThreefoldModel& t, const DivClass& divA, const DivClass& divB) {
  t.require_member(divA);
  t.require_member(divB);
  if (!t.has_basis(kF)) throw CenterError("model has no fiber class F");
  const IntPoly fiber = triple_product(t, divA, divB, DivClass::basis(kF));
  if (fiber != IntPoly(1)) {
    throw CenterError("unsupported center: fiber degree " + fiber.to_string() +
                      " (need divA.divB.F = 1)");
  }
  return {divA, divB, triple_product(t, divA, divA, divB), triple_product(t, divA, divB, divB),
          true};
}

namespace {

// The strict transform of a registered surface, or nothing if the engine
// cannot describe it.
std::optional<EmbeddedSurface> carry_surface(const ThreefoldModel& t, const EmbeddedSurface& s,
                                             const CICenter& c, const std::string& name) {
  EmbeddedSurface out = s;
  const DivClass e = DivClass::basis(name);
  if (s.cls == c.divA || s.cls == c.divB) {
    // C lies on S and is cut out there by the other center divisor.
    const DivClass& other = s.cls == c.divA ? c.divB : c.divA;
    out.cls = s.cls - e;
    out.restriction.emplace(name, restrict(s, other));
    out.provenance = "strict transform";
    return out;
  }
  if (pair_cycle(t, c.curve_class(), s.cls).is_zero()) {
    // Treated as disjoint from the center.
    out.restriction.emplace(name, pic_class(s.model, 0, 0));
    out.provenance = s.provenance == "given" ? "pullback" : s.provenance;
    return out;
  }
  return std::nullopt;
}

// X -> X1 -> X2; anything else gets a prime.
std::string next_model_name(const std::string& name) {
  if (name == "X") return "X1";
  if (name.size() > 1 && name[0] == 'X' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    return "X" + std::to_string(std::stoll(name.substr(1)) + 1);
  }
  return name + "'";
}

}  // namespace

EmbeddedSurface exceptional_surface(const ThreefoldModel& blown, const std::string& name,
                                    const CICenter& c, NRange range) {
  const IntPoly diff = c.degA - c.degB;
  const int sign = sign_on(diff, range);
  const IntPoly m = sign < 0 ? -diff : diff;
  const IntPoly d_min = sign < 0 ? c.degA : c.degB;

  const HirzebruchSurface model{m, name};
  const DivClass e = DivClass::basis(name);
  EmbeddedSurface s{name, e, model, {}, "exceptional"};
  s.restriction.emplace(kF, fiber_class(model));
  s.restriction.emplace(name, pic_class(model, -1, d_min));

  // For D|E = p*g + q*f: pairing with f gives p = E.D.F, pairing with
  // E|E = -g + d*f gives E.E.D = p*m + p*d - q.
  for (const auto& b : blown.basis()) {
    if (b == kF || b == name) continue;
    const DivClass d = DivClass::basis(b);
    const IntPoly p = triple_product(blown, e, d, DivClass::basis(kF));
    const IntPoly q = p * m + p * d_min - triple_product(blown, e, e, d);
    s.restriction.emplace(b, pic_class(model, p, q));
  }
  auto defects = compatibility_defects(blown.basis(), blown.triple(), s);
  if (!defects.empty()) {
    throw DomainError("exceptional surface " + name + " failed compatibility at (" +
                      defects.front().d1 + ", " + defects.front().d2 + ")");
  }
  return s;
}

ThreefoldModel blow_up(const ThreefoldModel& t, const CICenter& c, const std::string& name,
                       NRange range) {
  if (t.has_basis(name)) throw BasisError("basis already contains '" + name + "'");
  t.require_member(c.divA);
  t.require_member(c.divB);

  Basis basis = t.basis();
  basis.push_back(name);
  const std::size_t e = basis.size() - 1;
  TripleForm triple = t.triple().extended(basis.size());
  const Cycle2 curve = c.curve_class();
  for (std::size_t i = 0; i < e; ++i) {
    // E.D.D' = 0 is implicit: those entries are never set.
    triple.set(i, e, e, -pair_cycle(t, curve, DivClass::basis(basis[i])));
  }
  triple.set(e, e, e, -c.normal_degree());

  const DivClass exc = DivClass::basis(name);
  const DivClass c1 = t.c1() - exc;
  const Cycle2 c2 = t.c2() + curve - Cycle2::product(t.c1(), exc);
  const IntPoly euler = t.euler() + IntPoly(2);  // e(E) - e(C) = 4 - 2

  // Surfaces need the new form to be validated, so build in two passes.
  ThreefoldModel bare(t.name() + "'", basis, triple, c1, c2, euler);
  std::vector<EmbeddedSurface> surfaces;
  for (const auto& s : t.surfaces()) {
    if (auto carried = carry_surface(t, s, c, name)) surfaces.push_back(std::move(*carried));
  }
  surfaces.push_back(exceptional_surface(bare, name, c, range));

  return ThreefoldModel(next_model_name(t.name()), std::move(basis), std::move(triple), c1, c2, euler,
                        std::move(surfaces));
}

}  // namespace chowtower
