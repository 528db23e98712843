#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chowtower/blowup.hpp"
#include "chowtower/bundle.hpp"
#include "chowtower/cover.hpp"
#include "chowtower/poly.hpp"
#include "chowtower/threefold.hpp"

namespace chowtower {

/// A value from the tower file together with where it came from, so errors
/// raised while evaluating it later can point back into the file.
struct Located {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct BlowupSpec {
  Located divA;
  Located divB;
  std::string name;
};

struct CoverSpec {
  Located branch;
  std::optional<Located> boundary;    // D in the pair (Y, D)
  std::optional<std::string> k3_surface;
};

/// Parsed tower file:
///
///   [base]        index = "n"
///   [bundle]      x = 2, y = -1
///   [[blowup]]    center = ["C0", "tau+A"], name = "E1"   (repeatable, ordered)
///   [cover]       branch = "-2*K - 2*E2", boundary = "E2", k3_surface = "E2"
///
/// One `key = value` per line, `#` comments. Symbols become available in
/// file order: n, C0, F after [base]; tau, A, K, K_X after [bundle]; each
/// blow-up's name after its section.
struct TowerSpec {
  Located base_index{"n", 0, 0};
  BundleSpec bundle;
  std::vector<BlowupSpec> blowups;
  std::optional<CoverSpec> cover;
};

/// Throws ParseError (line and column in the file) for syntax errors, unknown
/// keys, and symbols used before the stage that defines them.
TowerSpec parse_tower(std::string_view text);

/// Every stage of the tower, X = stages[0], X1 = stages[1], ...
struct Tower {
  TowerSpec spec;
  NRange range;
  std::vector<ThreefoldModel> stages;
  std::vector<CICenter> centers;  // centers[i] is blown up to get stages[i+1]
  std::optional<CoverModel> cover;
  std::optional<DivClass> boundary;

  const ThreefoldModel& final_stage() const { return stages.back(); }
  const ThreefoldModel& stage(std::size_t i) const;  // throws BasisError
  DivClass bundle_a() const { return chowtower::bundle_A(spec.bundle); }

  /// Evaluates a divisor expression on a stage. K is that stage's canonical
  /// class, K_X the scroll's.
  DivClass divisor(std::string_view text, std::size_t stage) const;
};

Tower build_tower(const TowerSpec& spec, NRange range = {});

}  // namespace chowtower
