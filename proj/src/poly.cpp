#include "chowtower/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "chowtower/error.hpp"

namespace chowtower {

namespace detail {

IntPoly::Coeff checked_add(IntPoly::Coeff a, IntPoly::Coeff b) {
  IntPoly::Coeff out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in polynomial addition");
  }
  return out;
}

IntPoly::Coeff checked_mul(IntPoly::Coeff a, IntPoly::Coeff b) {
  IntPoly::Coeff out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in polynomial multiplication");
  }
  return out;
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;

IntPoly::IntPoly(Coeff constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

IntPoly::IntPoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) {
  normalize();
}

IntPoly::IntPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly IntPoly::n() { return IntPoly{0, 1}; }

IntPoly IntPoly::linear(Coeff a, Coeff b) { return IntPoly{b, a}; }

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<IntPoly::Coeff> IntPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return coeff(0);
}

IntPoly::Coeff IntPoly::eval_at(Coeff n0) const {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, n0), *it);
  }
  return acc;
}

bool IntPoly::divisible_by(Coeff d) const {
  if (d == 0) return false;
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [d](Coeff c) { return c % d == 0; });
}

IntPoly IntPoly::exact_div(Coeff d) const {
  if (!divisible_by(d)) {
    throw DomainError("polynomial " + to_string() + " is not divisible by " +
                      std::to_string(d));
  }
  std::vector<Coeff> out(coeffs_);
  for (auto& c : out) c /= d;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<Coeff> out(coeffs_);
  for (auto& c : out) c = checked_mul(c, -1);
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  }
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) { return *this += -other; }

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = *this * other;
  return *this;
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<IntPoly::Coeff> out(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(p.coeffs_[i], q.coeffs_[j]));
    }
  }
  return IntPoly(std::move(out));
}

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }
IntPoly::Coeff eval_at(const IntPoly& p, IntPoly::Coeff n0) { return p.eval_at(n0); }

namespace {

std::string render(const IntPoly& p, bool spaced) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const IntPoly::Coeff c = p.coeff(static_cast<std::size_t>(d));
    if (c == 0) continue;
    // |INT64_MIN| is not representable; print via unsigned magnitude.
    const auto mag = c < 0 ? 0ULL - static_cast<unsigned long long>(c)
                           : static_cast<unsigned long long>(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += spaced ? (c < 0 ? " - " : " + ") : (c < 0 ? "-" : "+");
    }
    if (d == 0 || mag != 1) out += std::to_string(mag);
    if (d >= 1) out += "n";
    if (d >= 2) out += "^" + std::to_string(d);
    first = false;
  }
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    IntPoly acc;
    bool first = true;
    while (!at_end()) {
      IntPoly::Coeff sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc += term() * IntPoly(sign);
      first = false;
      skip_ws();
    }
    return acc;
  }

 private:
  IntPoly term() {
    IntPoly::Coeff coeff = 1;
    bool have_number = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_number = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'n') fail("expected 'n' after '*'");
      }
    }
    if (!at_end() && peek() == 'n') {
      ++pos_;
      std::size_t power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        power = static_cast<std::size_t>(number());
      }
      std::vector<IntPoly::Coeff> c(power + 1, 0);
      c[power] = coeff;
      return IntPoly(std::move(c));
    }
    if (!have_number) fail("expected a number or 'n'");
    return IntPoly(coeff);
  }

  IntPoly::Coeff number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    IntPoly::Coeff value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) fail("integer literal out of range");
    return value;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in polynomial '" + std::string(text_) + "'", 1, pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string IntPoly::to_string() const { return render(*this, true); }
std::string IntPoly::to_compact_string() const { return render(*this, false); }

IntPoly IntPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

NRange parse_nrange(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    throw ParseError("expected '<a>..<b>' range, got '" + std::string(text) + "'", 1, 1);
  }
  auto parse_int = [&](std::string_view part, std::size_t offset) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw ParseError("bad range bound '" + std::string(part) + "'", 1, offset + 1);
    }
    return v;
  };
  NRange r{parse_int(text.substr(0, dots), 0), parse_int(text.substr(dots + 2), dots + 2)};
  if (r.lo < 1 || r.hi < r.lo) {
    throw ParseError("range must satisfy 1 <= a <= b", 1, 1);
  }
  return r;
}

int sign_on(const IntPoly& p, NRange range) {
  auto sgn = [](IntPoly::Coeff v) { return (v > 0) - (v < 0); };
  const int mid = sgn(p.eval_at(range.lo + (range.hi - range.lo) / 2));
  if (sgn(p.eval_at(range.lo)) != mid || sgn(p.eval_at(range.hi)) != mid) {
    throw DomainError("sign of " + p.to_string() + " is not constant on n in [" +
                      std::to_string(range.lo) + ", " + std::to_string(range.hi) + "]");
  }
  return mid;
}

bool nonnegative_on(const IntPoly& p, NRange range) {
  if (auto c = p.constant_value()) return *c >= 0;
  for (std::int64_t k = range.lo; k <= range.hi; ++k) {
    if (p.eval_at(k) < 0) return false;
  }
  return true;
}

}  // namespace chowtower
