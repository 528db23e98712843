#include "chowtower/linsys.hpp"

#include <algorithm>
#include <limits>

#include "chowtower/error.hpp"
#include "chowtower/sweep.hpp"

namespace chowtower {

namespace {

void require_main_case(const BundleSpec& spec) {
  if (!spec.main_case()) {
    throw DomainError("bianticanonical analysis is only available for A = 2C0 - F");
  }
}

DivClass rigid_r(const BundleSpec& spec) { return DivClass::basis(kTau) + bundle_A(spec); }

}  // namespace

Bianticanonical bianticanonical(const BundleSpec& spec) {
  require_main_case(spec);
  const ThreefoldModel x = build_scroll(spec);
  Bianticanonical out;
  out.canonical = x.canonical();
  out.minus_2k = IntPoly(-2) * out.canonical;
  out.rigid_form = IntPoly(4) * rigid_r(spec) +
                   DivClass{{kF, IntPoly(2) * spec.base_index + IntPoly(6)}};
  out.recombination_ok = out.rigid_form == out.minus_2k;
  return out;
}

FiltrationPlan plan_filtration(const BundleSpec& spec, int k) {
  require_main_case(spec);
  if (k < 1) throw DomainError("filtration depth must be at least 1");
  const ThreefoldModel x = build_scroll(spec);
  const EmbeddedSurface& r = x.surface("R");
  const DivClass minus_2k = IntPoly(-2) * x.canonical();
  FiltrationPlan plan{spec, k, {}, {}, {}};
  for (int i = 0; i <= k; ++i) {
    DivClass d = minus_2k - IntPoly(i) * rigid_r(spec);
    SurfacePicClass on_r = restrict(r, d);
    plan.sigma_degrees.push_back(intersect(r.model, section_class(r.model), on_r));
    plan.divisors.push_back(std::move(d));
    plan.on_r.push_back(std::move(on_r));
  }
  return plan;
}

FiltrationReport evaluate_filtration(const FiltrationPlan& plan, std::int64_t n0) {
  if (n0 < 1) throw DomainError("n must be positive");
  FiltrationReport out;
  out.n0 = n0;
  const std::int64_t m0 = plan.spec.base_index.eval_at(n0);
  const std::size_t count = plan.divisors.size();
  for (std::size_t i = 0; i < count; ++i) {
    out.dims.push_back(h0_scroll(plan.spec, n0, plan.divisors[i]));
    const std::int64_t a = plan.on_r[i].a().eval_at(n0);
    const std::int64_t b = plan.on_r[i].b().eval_at(n0);
    out.restriction_dims.push_back(h0(m0, a, b));
    if (out.restriction_dims.back() > 0) {
      out.fixed_mults.push_back(fixed_part(m0, a, b).mult);
    } else {
      out.fixed_mults.push_back(std::nullopt);
    }
  }
  for (std::size_t i = 0; i + 1 < count; ++i) {
    out.drops.push_back(out.dims[i] - out.dims[i + 1]);
    out.surjective.push_back(out.drops[i] == out.restriction_dims[i]);
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < count; ++i) {
    if (out.fixed_mults[i]) {
      best = std::min(best, static_cast<std::int64_t>(i) + *out.fixed_mults[i]);
    }
  }
  if (best == std::numeric_limits<std::int64_t>::max()) {
    throw DomainError("every restricted system in the filtration is empty");
  }
  out.multiplicity = best;
  return out;
}

FiltrationReport filtration(const BundleSpec& spec, std::int64_t n0, int k) {
  return evaluate_filtration(plan_filtration(spec, k), n0);
}

BaseLocusReport base_locus(const BundleSpec& spec, std::int64_t n0) {
  const Bianticanonical bk = bianticanonical(spec);
  const ThreefoldModel x = build_scroll(spec);
  const EmbeddedSurface& r = x.surface("R");
  const EmbeddedSurface& u = x.surface("U");
  const std::int64_t m0 = spec.base_index.eval_at(n0);

  BaseLocusReport out;
  out.n0 = n0;
  out.divA = rigid_r(spec);
  out.divB = DivClass::basis(kC0);

  auto step = [&](std::string name, bool ok, std::string detail) {
    out.steps.push_back({name, ok, detail});
    if (!ok) throw DomainError("base locus step '" + name + "' failed: " + detail);
  };

  step("rigid recombination", bk.recombination_ok,
       "-2K = " + x.render(bk.minus_2k) + " = 4*(tau + A) + (" +
           (IntPoly(2) * spec.base_index + IntPoly(6)).to_compact_string() + ")*F");

  const std::int64_t fiber_mult = bk.rigid_form.coeff(kF).eval_at(n0);
  const std::int64_t fiber_h0 = h0_scroll(spec, n0, ScrollDegrees{0, 0, fiber_mult});
  const std::int64_t fiber_fixed = fixed_part(m0, 0, fiber_mult).mult;
  step("fiber part free", fiber_h0 > 1 && fiber_fixed == 0,
       "h0(" + std::to_string(fiber_mult) + "F) = " + std::to_string(fiber_h0) +
           ", fixed part " + std::to_string(fiber_fixed));

  const std::int64_t h_full = h0_scroll(spec, n0, bk.minus_2k);
  const std::int64_t h_minus_r = h0_scroll(spec, n0, bk.minus_2k - out.divA);
  step("R not a fixed component", h_minus_r < h_full,
       "h0(-2K - R) = " + std::to_string(h_minus_r) + " < h0(-2K) = " +
           std::to_string(h_full));

  out.on_r = restrict(r, bk.minus_2k);
  out.fixed_on_r =
      fixed_part(m0, out.on_r->a().eval_at(n0), out.on_r->b().eval_at(n0)).mult;
  step("fixed curve on R", out.fixed_on_r > 0,
       "-2K|R = " + out.on_r->to_string() + ", fixed part " + std::to_string(out.fixed_on_r) +
           "*g_R");

  out.on_u = restrict(u, bk.minus_2k);
  const std::int64_t mu0 = u.model.index.eval_at(n0);
  out.fixed_on_u = fixed_part(mu0, out.on_u->a().eval_at(n0), out.on_u->b().eval_at(n0)).mult;
  step("fixed curve on U", out.fixed_on_u > 0,
       "-2K|U = " + out.on_u->to_string() + ", fixed part " + std::to_string(out.fixed_on_u) +
           "*g_U");

  // The fixed curves are the negative sections; both must be R . U.
  out.curve_on_r = restrict(r, out.divB);
  out.curve_on_u = restrict(u, out.divA);
  step("fixed curves are R.U",
       *out.curve_on_r == section_class(r.model) && *out.curve_on_u == section_class(u.model),
       "U|R = " + out.curve_on_r->to_string() + ", R|U = " + out.curve_on_u->to_string());
  return out;
}

std::string Quantity::name() const {
  switch (kind) {
    case QuantityKind::Dim: return "h0(D" + std::to_string(index) + ")";
    case QuantityKind::Drop:
      return "h0(D" + std::to_string(index) + ") - h0(D" + std::to_string(index + 1) + ")";
    case QuantityKind::RestrictionDim: return "h0(D" + std::to_string(index) + "|R)";
    case QuantityKind::Multiplicity: return "multiplicity";
  }
  return "?";
}

std::int64_t Quantity::read(const FiltrationReport& r) const {
  const auto i = static_cast<std::size_t>(index);
  switch (kind) {
    case QuantityKind::Dim: return r.dims.at(i);
    case QuantityKind::Drop: return r.drops.at(i);
    case QuantityKind::RestrictionDim: return r.restriction_dims.at(i);
    case QuantityKind::Multiplicity: return r.multiplicity;
  }
  return 0;
}

LinearForm fit_linear_tail(std::span<const std::int64_t> values, NRange range,
                           const std::function<std::int64_t(std::int64_t)>& extra) {
  if (static_cast<std::int64_t>(values.size()) != range.size()) {
    throw DomainError("value count does not match the n range");
  }
  if (values.size() < 3) throw DomainError("need at least three values to stabilize");
  auto at = [&](std::int64_t n0) { return values[static_cast<std::size_t>(n0 - range.lo)]; };
  const std::int64_t slope = at(range.hi) - at(range.hi - 1);
  const std::int64_t intercept = at(range.hi) - slope * range.hi;
  const IntPoly form = IntPoly::linear(slope, intercept);

  std::int64_t threshold = range.hi;
  while (threshold > range.lo && at(threshold - 1) == form.eval_at(threshold - 1)) --threshold;
  if (range.hi - threshold < 2) {
    throw DomainError("no stabilization within n in [" + std::to_string(range.lo) + ", " +
                      std::to_string(range.hi) + "]");
  }
  for (std::int64_t n0 = range.hi + 1; n0 <= range.hi + 10; ++n0) {
    if (extra(n0) != form.eval_at(n0)) {
      throw DomainError("linear form " + form.to_string() + " fails at n = " +
                        std::to_string(n0));
    }
  }
  return {form, threshold};
}

LinearForm stabilize(const BundleSpec& spec, Quantity q, NRange range, int k) {
  const FiltrationPlan plan = plan_filtration(spec, k);
  const auto reports = sweep_filtration(plan, range);
  std::vector<std::int64_t> values;
  values.reserve(reports.size());
  for (const auto& r : reports) values.push_back(q.read(r));
  return fit_linear_tail(values, range, [&](std::int64_t n0) {
    return q.read(evaluate_filtration(plan, n0));
  });
}

StabilizedTable stabilize_table(const BundleSpec& spec, NRange range, int k) {
  const FiltrationPlan plan = plan_filtration(spec, k);
  StabilizedTable table;
  table.range = range;
  table.reports = sweep_filtration(plan, range);

  std::vector<FiltrationReport> tail;
  for (std::int64_t n0 = range.hi + 1; n0 <= range.hi + 10; ++n0) {
    tail.push_back(evaluate_filtration(plan, n0));
  }
  auto fit = [&](Quantity q) {
    std::vector<std::int64_t> values;
    values.reserve(table.reports.size());
    for (const auto& r : table.reports) values.push_back(q.read(r));
    LinearForm f = fit_linear_tail(values, range, [&](std::int64_t n0) {
      return q.read(tail[static_cast<std::size_t>(n0 - range.hi - 1)]);
    });
    table.n0 = std::max(table.n0, f.threshold);
    return f;
  };
  for (int i = 0; i <= k; ++i) table.dims.push_back(fit(Quantity::dim(i)));
  for (int i = 0; i < k; ++i) table.drops.push_back(fit(Quantity::drop(i)));
  table.multiplicity = fit(Quantity::multiplicity());
  return table;
}

}  // namespace chowtower
