#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chowtower {

/// Exact univariate polynomial in the formal parameter n with 64-bit integer
/// coefficients. Every operation that would leave the 64-bit range throws
/// OverflowError instead of wrapping.
///
/// Storage is dense: coeffs()[i] is the coefficient of n^i. The highest stored
/// entry is nonzero; the zero polynomial has no entries.
class IntPoly {
 public:
  using Coeff = std::int64_t;

  IntPoly() = default;
  IntPoly(Coeff constant);  // NOLINT(google-explicit-constructor)
  IntPoly(std::initializer_list<Coeff> coeffs);
  explicit IntPoly(std::vector<Coeff> coeffs);

  /// The monomial n.
  static IntPoly n();
  /// a*n + b
  static IntPoly linear(Coeff a, Coeff b);

  /// Parses "3n^2 - 48*n - 46", "n+1", "-n", "7". Throws ParseError.
  static IntPoly parse(std::string_view text);

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  Coeff coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : 0;
  }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::optional<Coeff> constant_value() const;

  Coeff eval_at(Coeff n0) const;

  /// Divides every coefficient by d; throws DomainError if any is not divisible.
  IntPoly exact_div(Coeff d) const;
  bool divisible_by(Coeff d) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);

  friend IntPoly operator+(IntPoly p, const IntPoly& q) { return p += q; }
  friend IntPoly operator-(IntPoly p, const IntPoly& q) { return p -= q; }
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// "-48n - 46", "3n^2 + 1", "0".
  std::string to_string() const;
  /// Same as to_string() without spaces: "2n+2".
  std::string to_compact_string() const;

 private:
  void normalize();

  std::vector<Coeff> coeffs_;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly::Coeff eval_at(const IntPoly& p, IntPoly::Coeff n0);

/// Inclusive range of values of n over which symbolic sign questions are decided.
struct NRange {
  std::int64_t lo = 1;
  std::int64_t hi = 60;

  std::int64_t size() const { return hi >= lo ? hi - lo + 1 : 0; }
  friend bool operator==(const NRange&, const NRange&) = default;
};

/// Parses "a..b".
NRange parse_nrange(std::string_view text);

/// Sign of p (-1, 0, 1) decided at a sample deep inside the range and confirmed
/// at both endpoints. Throws DomainError if the sign is not constant.
int sign_on(const IntPoly& p, NRange range);

/// True iff p(n) >= 0 at every integer n of the range.
bool nonnegative_on(const IntPoly& p, NRange range);

namespace detail {
IntPoly::Coeff checked_add(IntPoly::Coeff a, IntPoly::Coeff b);
IntPoly::Coeff checked_mul(IntPoly::Coeff a, IntPoly::Coeff b);
}  // namespace detail

}  // namespace chowtower
