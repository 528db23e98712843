#include "chowtower/cover.hpp"

#include <algorithm>
#include <functional>

#include "chowtower/error.hpp"

namespace chowtower {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

CoverModel double_cover(const ThreefoldModel& t, const DivClass& branch) {
  t.require_member(branch);
  if (!branch.divisible_by(2)) {
    throw DomainError("branch class not 2-divisible: " + t.render(branch));
  }
  const DivClass half = branch.exact_div(2);
  const IntPoly eb = euler_divisor(t, branch);
  return {t, branch, half, eb, IntPoly(2) * t.euler() - eb, t.canonical() + half};
}

LogCYReport verify_log_cy(const CoverModel& cm, const DivClass& d) {
  cm.base.require_member(d);
  LogCYReport out;
  out.residual = cm.canonical_pullback + d;
  out.verdict = out.residual.is_zero() ? Verdict::Pass : Verdict::Fail;
  return out;
}

K3Report k3_check(const CoverModel& cm, const std::string& surface, NRange range) {
  const EmbeddedSurface& s = cm.base.surface(surface);
  const SurfacePicClass b = restrict(s, cm.branch);
  K3Report out{.surface = surface, .branch_restriction = b,
               .bianticanonical = canonical(s.model).scaled(-2)};
  out.is_bianticanonical = b == out.bianticanonical;

  try {
    out.genus = genus(s.model, b);
    out.euler = IntPoly(2 * euler(s.model)) - (IntPoly(2) - IntPoly(2) * *out.genus);
  } catch (const DomainError&) {
    // non-integral adjunction: not a curve class
  }

  try {
    std::int64_t worst = 0;
    for (std::int64_t n0 : {range.lo, range.lo + (range.hi - range.lo) / 2, range.hi}) {
      const auto fp = fixed_part(s.model.index.eval_at(n0), b.a().eval_at(n0), b.b().eval_at(n0));
      worst = std::max(worst, fp.mult);
    }
    out.fixed_mult = worst;
  } catch (const DomainError&) {
    // empty linear system
  }

  const bool euler_ok = out.euler && *out.euler == IntPoly(24);
  out.verdict = out.is_bianticanonical && euler_ok ? Verdict::Pass : Verdict::Fail;
  return out;
}

namespace {

bool basis_nonnegative(const DivClass& d, NRange range) {
  return std::all_of(d.terms().begin(), d.terms().end(),
                     [&](const auto& kv) { return nonnegative_on(kv.second, range); });
}

}  // namespace

KodairaReport kodaira_sign_check(const CoverModel& cm, NRange range) {
  KodairaReport out;
  out.minus_canonical = -cm.canonical_pullback;
  const DivClass& target = out.minus_canonical;
  if (target.is_zero()) {
    out.verdict = Verdict::Pass;
    out.note = "Calabi-Yau class: K_Y = 0";
    return out;
  }
  if (basis_nonnegative(target, range)) {
    out.verdict = Verdict::Pass;
    out.note = "nonnegative combination of effective basis divisors";
    return out;
  }

  // Registered surfaces whose class is not already a basis divisor.
  std::vector<const EmbeddedSurface*> gens;
  for (const auto& s : cm.base.surfaces()) {
    const bool is_basis = s.cls.terms().size() == 1 && s.cls.terms().begin()->second == IntPoly(1);
    if (!is_basis) gens.push_back(&s);
  }
  constexpr std::int64_t kMaxMultiple = 4;
  std::vector<std::int64_t> mult(gens.size(), 0);
  std::function<bool(std::size_t, const DivClass&)> search = [&](std::size_t i,
                                                                 const DivClass& rest) {
    if (i == gens.size()) return basis_nonnegative(rest, range);
    for (std::int64_t k = 0; k <= kMaxMultiple; ++k) {
      mult[i] = k;
      if (search(i + 1, rest - IntPoly(k) * gens[i]->cls)) return true;
    }
    mult[i] = 0;
    return false;
  };
  if (search(0, target)) {
    out.verdict = Verdict::Pass;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (mult[i] != 0) out.surface_terms.emplace_back(gens[i]->name, mult[i]);
    }
    out.note = "nonnegative combination of registered surfaces and basis divisors";
    return out;
  }
  out.verdict = Verdict::Inconclusive;
  out.note = "not a nonnegative combination of known effective classes";
  return out;
}

}  // namespace chowtower
