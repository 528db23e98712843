#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chowtower/bundle.hpp"
#include "chowtower/poly.hpp"
#include "chowtower/surface.hpp"
#include "chowtower/threefold.hpp"

namespace chowtower {

/// -2K on the main-case scroll and its rewrite over the rigid divisor tau + A.
struct Bianticanonical {
  DivClass canonical;   // K = -2tau - 4C0 - (n+1)F
  DivClass minus_2k;    // 4tau + 8C0 + (2n+2)F
  DivClass rigid_form;  // 4(tau + A) + (2n+6)F
  bool recombination_ok = false;
};

/// Throws DomainError unless spec is the main case.
Bianticanonical bianticanonical(const BundleSpec& spec);

/// Symbolic part of the filtration D_i = -2K - i(tau + A), i = 0..k, and the
/// restrictions D_i|R. Computed once and then evaluated per n.
struct FiltrationPlan {
  BundleSpec spec;
  int k = 4;
  std::vector<DivClass> divisors;
  std::vector<SurfacePicClass> on_r;
  /// sigma_R . D_i|R, with sigma_R the negative section g of R.
  std::vector<IntPoly> sigma_degrees;
};

FiltrationPlan plan_filtration(const BundleSpec& spec, int k = 4);

struct FiltrationReport {
  std::int64_t n0 = 0;
  std::vector<std::int64_t> dims;              // h0(D_i), i = 0..k
  std::vector<std::int64_t> drops;             // dims[i] - dims[i+1], i < k
  std::vector<std::int64_t> restriction_dims;  // h0(R, D_i|R), i = 0..k
  std::vector<bool> surjective;                // drops[i] == restriction_dims[i]
  /// Multiple of sigma_R in the fixed part of |D_i|R|; empty if that system is empty.
  std::vector<std::optional<std::int64_t>> fixed_mults;
  /// Order of vanishing along sigma of the generic member: min_i (i + m_i).
  std::int64_t multiplicity = 0;

  friend bool operator==(const FiltrationReport&, const FiltrationReport&) = default;
};

FiltrationReport evaluate_filtration(const FiltrationPlan& plan, std::int64_t n0);
FiltrationReport filtration(const BundleSpec& spec, std::int64_t n0, int k = 4);

struct BaseLocusStep {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct BaseLocusReport {
  std::int64_t n0 = 0;
  DivClass divA;  // tau + A
  DivClass divB;  // C0
  std::vector<BaseLocusStep> steps;
  std::optional<SurfacePicClass> on_r, on_u;          // -2K restricted
  std::int64_t fixed_on_r = 0, fixed_on_u = 0;        // fixed multiples of g
  std::optional<SurfacePicClass> curve_on_r, curve_on_u;  // sigma inside R and U
};

/// Locates the base curve of |-2K| as R . U = (tau + A) . C0. Throws
/// DomainError naming the first failing step.
BaseLocusReport base_locus(const BundleSpec& spec, std::int64_t n0);

enum class QuantityKind { Dim, Drop, RestrictionDim, Multiplicity };

struct Quantity {
  QuantityKind kind = QuantityKind::Dim;
  int index = 0;

  static Quantity dim(int i) { return {QuantityKind::Dim, i}; }
  static Quantity drop(int i) { return {QuantityKind::Drop, i}; }
  static Quantity restriction_dim(int i) { return {QuantityKind::RestrictionDim, i}; }
  static Quantity multiplicity() { return {QuantityKind::Multiplicity, 0}; }

  std::string name() const;
  std::int64_t read(const FiltrationReport& r) const;
};

struct LinearForm {
  IntPoly form;                 // a*n + b
  std::int64_t threshold = 0;   // least N0 in the range from which the form holds
};

/// Exact fit: the last two values fix the candidate a*n + b; N0 is the least
/// n such that every value from n to range.hi matches. `extra` is then
/// checked at range.hi + 1 .. range.hi + 10. Throws DomainError when fewer
/// than three in-range values fit or an extra sample disagrees.
LinearForm fit_linear_tail(std::span<const std::int64_t> values, NRange range,
                           const std::function<std::int64_t(std::int64_t)>& extra);

LinearForm stabilize(const BundleSpec& spec, Quantity q, NRange range, int k = 4);

/// Every dim, drop and the multiplicity stabilized from one sweep.
struct StabilizedTable {
  NRange range;
  std::vector<LinearForm> dims, drops;
  LinearForm multiplicity;
  std::int64_t n0 = 0;  // max threshold over all quantities
  std::vector<FiltrationReport> reports;  // one per n in range
};

StabilizedTable stabilize_table(const BundleSpec& spec, NRange range, int k = 4);

}  // namespace chowtower
