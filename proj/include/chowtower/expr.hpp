#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "chowtower/poly.hpp"
#include "chowtower/threefold.hpp"

namespace chowtower {

/// Divisor expressions: sums of terms such as `(2n+2)*F`, `-2*K - 2*E1 - 4*E2`,
/// `4(tau+A) + (2n+6)*F`. The identifier `n` is the scalar parameter; every
/// other identifier is resolved by the caller. Multiplication may be
/// implicit before an identifier or '(' (`2n`, `3(tau+A)`); `^` is allowed on
/// scalars only.
using ExprValue = std::variant<IntPoly, DivClass>;

/// Resolves an identifier (column is 1-based within the expression).
/// Should throw ParseError for unknown names.
using SymbolResolver = std::function<DivClass(const std::string& name, std::size_t column)>;

/// Evaluates to a divisor class; a literal 0 gives the zero class. Throws
/// ParseError with the column of the offending token.
DivClass evaluate_divisor(std::string_view text, const SymbolResolver& resolve);

/// Evaluates to a scalar polynomial (no divisor symbols allowed).
IntPoly evaluate_scalar(std::string_view text);

/// Resolver for a model: basis names, K (its canonical class) and optionally
/// A and K_X (the canonical class of the scroll, pulled back).
SymbolResolver model_resolver(const ThreefoldModel& model,
                              std::optional<DivClass> bundle_a = std::nullopt,
                              std::optional<DivClass> scroll_canonical = std::nullopt);

}  // namespace chowtower
