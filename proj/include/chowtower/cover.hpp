#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chowtower/poly.hpp"
#include "chowtower/surface.hpp"
#include "chowtower/threefold.hpp"

namespace chowtower {

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

/// Degree-two cyclic cover Y -> T branched along a smooth member of B.
/// K_Y is the pullback of canonical_pullback = K_T + B/2.
struct CoverModel {
  ThreefoldModel base;
  DivClass branch;
  DivClass half;
  IntPoly branch_euler;  // e(B)
  IntPoly euler;         // 2 e(T) - e(B)
  DivClass canonical_pullback;
};

/// Throws DomainError("branch class not 2-divisible") for odd B.
CoverModel double_cover(const ThreefoldModel& t, const DivClass& branch);

/// K_Y + beta^* D = beta^*(canonical_pullback + D); passes iff that class is zero.
struct LogCYReport {
  Verdict verdict = Verdict::Fail;
  DivClass residual;
};

LogCYReport verify_log_cy(const CoverModel& cm, const DivClass& d);

/// K3 certificate for the preimage of a registered surface S: the branch
/// curve b = B|S must be bianticanonical on S, and the double cover of S
/// branched along b must have Euler number 24.
struct K3Report {
  std::string surface;
  SurfacePicClass branch_restriction;
  SurfacePicClass bianticanonical;
  bool is_bianticanonical = false;
  std::optional<IntPoly> genus{};  // of b; empty when adjunction is not integral
  std::optional<IntPoly> euler{};  // 2 e(S) - (2 - 2g)
  /// Largest fixed multiple of g in |b| over the sampled n; 0 means no fixed curve.
  std::optional<std::int64_t> fixed_mult{};
  Verdict verdict = Verdict::Fail;
};

K3Report k3_check(const CoverModel& cm, const std::string& surface, NRange range = {});

/// Negative Kodaira dimension certificate: -K_Y = beta^*(-canonical_pullback)
/// is effective if -canonical_pullback is a nonnegative combination of known
/// effective classes (basis divisors and registered surfaces).
struct KodairaReport {
  Verdict verdict = Verdict::Inconclusive;
  DivClass minus_canonical;
  std::vector<std::pair<std::string, std::int64_t>> surface_terms;
  std::string note;
};

KodairaReport kodaira_sign_check(const CoverModel& cm, NRange range = {});

}  // namespace chowtower
