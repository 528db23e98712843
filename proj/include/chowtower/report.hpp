#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chowtower/json_io.hpp"
#include "chowtower/tower.hpp"

namespace chowtower {

struct Check {
  std::string id;
  std::string description;
  bool pass = false;
  std::string expected;
  std::string actual;

  friend bool operator==(const Check&, const Check&) = default;
};

/// A claim the engine does not verify; reported with status "assumed per paper".
struct Assumption {
  std::string claim;
  std::string status = "assumed per paper";

  friend bool operator==(const Assumption&, const Assumption&) = default;
};

/// Result of one command. The JSON and text forms are both rendered from
/// this object.
struct Report {
  std::string command;
  json data = json::object();
  std::vector<Check> checks;
  std::vector<Assumption> assumptions;

  bool all_pass() const;
  json to_json() const;
  std::string to_text() const;

  friend bool operator==(const Report&, const Report&) = default;
};

Report report_from_json(const json& j);

/// Accepts a stage name ("X", "X1", ...) or index ("0", "1", ...).
std::size_t resolve_stage(const Tower& tower, std::string_view text);

Report run_chern(const Tower& tower);
Report run_intersect(const Tower& tower, std::size_t stage, const std::array<std::string, 3>& exprs);
/// h0 of a scroll divisor (stage 0) at n = n0.
Report run_h0(const Tower& tower, const std::string& expr, std::int64_t n0);
Report run_baselocus(const Tower& tower, std::int64_t n0);
Report run_filtration(const Tower& tower, std::int64_t n0);
Report run_euler_divisor(const Tower& tower, std::size_t stage, const std::string& expr);
/// Cover invariants. Needs a [cover] section.
Report run_cover(const Tower& tower);

/// Compares everything the tower computes over tower.range against the
/// expectations fixture. Failing computations become failing checks.
Report reproduce_paper(const Tower& tower, const json& expectations);

}  // namespace chowtower
