#include "chowtower/expr.hpp"

#include <cctype>
#include <charconv>

#include "chowtower/error.hpp"

namespace chowtower {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

class ExprParser {
 public:
  ExprParser(std::string_view text, const SymbolResolver* resolve)
      : text_(text), resolve_(resolve) {
    tokenize();
  }

  ExprValue parse() {
    ExprValue v = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek().column);
    return v;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t column) const {
    throw ParseError(what + " in expression '" + std::string(text_) + "'", 1, column);
  }

 private:
  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      const std::size_t col = i + 1;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        tokens_.push_back({Tok::Number, std::string(text_.substr(i, j - i)), col});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) {
          ++j;
        }
        tokens_.push_back({Tok::Ident, std::string(text_.substr(i, j - i)), col});
        i = j;
      } else {
        Tok kind;
        switch (c) {
          case '+': kind = Tok::Plus; break;
          case '-': kind = Tok::Minus; break;
          case '*': kind = Tok::Star; break;
          case '^': kind = Tok::Caret; break;
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          default: fail(std::string("unexpected character '") + c + "'", col);
        }
        tokens_.push_back({kind, std::string(1, c), col});
        ++i;
      }
    }
    tokens_.push_back({Tok::End, "end of input", text_.size() + 1});
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  ExprValue combine(ExprValue lhs, const ExprValue& rhs, int sign, std::size_t column) {
    const IntPoly s(sign);
    // A bare 0 may stand for the zero divisor.
    auto as_div = [](const ExprValue& v) -> std::optional<DivClass> {
      if (auto* d = std::get_if<DivClass>(&v)) return *d;
      if (std::get<IntPoly>(v).is_zero()) return DivClass{};
      return std::nullopt;
    };
    if (std::holds_alternative<IntPoly>(lhs) && std::holds_alternative<IntPoly>(rhs)) {
      return std::get<IntPoly>(lhs) + s * std::get<IntPoly>(rhs);
    }
    auto l = as_div(lhs);
    auto r = as_div(rhs);
    if (!l || !r) fail("cannot add a scalar and a divisor", column);
    return *l + s * *r;
  }

  ExprValue multiply(const ExprValue& lhs, const ExprValue& rhs, std::size_t column) {
    const auto* ls = std::get_if<IntPoly>(&lhs);
    const auto* rs = std::get_if<IntPoly>(&rhs);
    if (ls && rs) return *ls * *rs;
    if (ls) return *ls * std::get<DivClass>(rhs);
    if (rs) return *rs * std::get<DivClass>(lhs);
    fail("product of two divisors is not a divisor", column);
  }

  ExprValue expr() {
    int sign = 1;
    const std::size_t col = peek().column;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      sign = next().kind == Tok::Minus ? -1 : 1;
    }
    ExprValue acc = combine(IntPoly{}, term(), sign, col);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      acc = combine(std::move(acc), term(), op.kind == Tok::Minus ? -1 : 1, op.column);
    }
    return acc;
  }

  ExprValue term() {
    ExprValue acc = power();
    while (true) {
      const Tok k = peek().kind;
      const std::size_t col = peek().column;
      if (k == Tok::Star) {
        next();
      } else if (k != Tok::Ident && k != Tok::LParen) {
        break;
      }
      acc = multiply(acc, power(), col);
    }
    return acc;
  }

  ExprValue power() {
    ExprValue base = primary();
    if (peek().kind == Tok::Caret) {
      const Token& caret = next();
      if (!std::holds_alternative<IntPoly>(base)) fail("'^' applies to scalars only", caret.column);
      const Token& e = next();
      if (e.kind != Tok::Number) fail("expected an exponent", e.column);
      const auto exponent = to_int(e);
      IntPoly out(1);
      for (std::int64_t i = 0; i < exponent; ++i) out *= std::get<IntPoly>(base);
      return out;
    }
    return base;
  }

  ExprValue primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number: return IntPoly(to_int(t));
      case Tok::Ident:
        if (t.text == "n") return IntPoly::n();
        if (!resolve_) fail("unknown symbol '" + t.text + "'", t.column);
        return (*resolve_)(t.text, t.column);
      case Tok::LParen: {
        ExprValue v = expr();
        const Token& close = next();
        if (close.kind != Tok::RParen) fail("expected ')'", close.column);
        return v;
      }
      default: fail("unexpected '" + t.text + "'", t.column);
    }
  }

  std::int64_t to_int(const Token& t) const {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{}) fail("integer literal out of range", t.column);
    return v;
  }

  std::string_view text_;
  const SymbolResolver* resolve_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

DivClass evaluate_divisor(std::string_view text, const SymbolResolver& resolve) {
  ExprParser parser(text, &resolve);
  ExprValue v = parser.parse();
  if (auto* d = std::get_if<DivClass>(&v)) return *d;
  if (std::get<IntPoly>(v).is_zero()) return {};
  parser.fail("expected a divisor, got a scalar", 1);
}

IntPoly evaluate_scalar(std::string_view text) {
  ExprParser parser(text, nullptr);
  ExprValue v = parser.parse();
  return std::get<IntPoly>(v);
}

SymbolResolver model_resolver(const ThreefoldModel& model, std::optional<DivClass> bundle_a,
                              std::optional<DivClass> scroll_canonical) {
  return [&model, a = std::move(bundle_a), kx = std::move(scroll_canonical)](
             const std::string& name, std::size_t column) {
    if (name == "K") return model.canonical();
    if (name == "K_X" && kx) return *kx;
    if (name == "A" && a) return *a;
    if (model.has_basis(name)) return DivClass::basis(name);
    throw ParseError("unknown symbol '" + name + "' on " + model.name(), 1, column);
  };
}

}  // namespace chowtower
