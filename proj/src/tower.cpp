#include "chowtower/tower.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "chowtower/error.hpp"
#include "chowtower/expr.hpp"

namespace chowtower {

namespace {

struct Line {
  std::string_view text;
  std::size_t number;
};

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset += b;
  return s.substr(b, e - b);
}

// Value parsing for the small subset we accept: "string", integer, ["s", "s"].
class ValueReader {
 public:
  ValueReader(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  Located string() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '"') fail("expected a quoted string");
    const std::size_t start = ++pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
    if (pos_ >= text_.size()) fail("unterminated string");
    Located out{std::string(text_.substr(start, pos_ - start)), line_, column_ + start};
    ++pos_;
    return out;
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t v = 0;
    const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, v);
    if (ec != std::errc{} || ptr != text_.data() + pos_) fail("expected an integer");
    return v;
  }

  std::vector<Located> string_array() {
    skip_ws();
    expect('[');
    std::vector<Located> out;
    skip_ws();
    if (peek() != ']') {
      while (true) {
        out.push_back(string());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    skip_ws();
    expect(']');
    return out;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after value");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, column_ + pos_);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t column_;  // column of text_[0]
  std::size_t pos_ = 0;
};

// Re-raises an expression error at its position inside the tower file.
template <typename Fn>
auto at_location(const Located& where, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    std::string what = e.what();
    const auto colon = what.find(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError(what, where.line, where.column + e.column() - 1);
  }
}

void check_symbols(const Located& expr, const std::set<std::string>& defined) {
  SymbolResolver resolver = [&](const std::string& name, std::size_t column) {
    if (!defined.count(name)) {
      throw ParseError("symbol '" + name + "' is not defined at this stage", 1, column);
    }
    return DivClass::basis(name);
  };
  at_location(expr, [&] { return evaluate_divisor(expr.text, resolver); });
}

enum class Section { None, Base, Bundle, Blowup, Cover };

}  // namespace

TowerSpec parse_tower(std::string_view text) {
  TowerSpec spec;
  std::set<std::string> defined{"n", "C0", "F"};
  Section section = Section::None;
  bool seen_bundle = false;
  bool bundle_x = false, bundle_y = false;
  std::set<std::string> seen_keys;
  std::size_t section_line = 0;

  auto close_section = [&]() {
    if (section == Section::Blowup) {
      auto& b = spec.blowups.back();
      if (b.divA.text.empty()) {
        throw ParseError("[[blowup]] needs a center", section_line, 1);
      }
      if (b.name.empty()) b.name = "E" + std::to_string(spec.blowups.size());
      if (defined.count(b.name)) {
        throw ParseError("name '" + b.name + "' is already defined", section_line, 1);
      }
      defined.insert(b.name);
    } else if (section == Section::Bundle) {
      if (!bundle_x || !bundle_y) throw ParseError("[bundle] needs x and y", section_line, 1);
      if (spec.bundle.x < 0) throw ParseError("bundle x must be nonnegative", section_line, 1);
      defined.insert({"tau", "A", "K", "K_X"});
    } else if (section == Section::Cover) {
      if (spec.cover->branch.text.empty()) {
        throw ParseError("[cover] needs a branch", section_line, 1);
      }
    }
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;

    // Strip comments outside quotes.
    bool in_quote = false;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '"') in_quote = !in_quote;
      if (raw[i] == '#' && !in_quote) {
        raw = raw.substr(0, i);
        break;
      }
    }
    std::size_t col0 = 1;
    std::string_view line = trim(raw, &col0);
    if (line.empty()) continue;

    if (line.front() == '[') {
      close_section();
      seen_keys.clear();
      section_line = line_no;
      if (line == "[base]") {
        if (section != Section::None) throw ParseError("[base] must come first", line_no, col0);
        section = Section::Base;
      } else if (line == "[bundle]") {
        if (seen_bundle) throw ParseError("duplicate [bundle]", line_no, col0);
        if (section == Section::Blowup || section == Section::Cover) {
          throw ParseError("[bundle] must precede [[blowup]] and [cover]", line_no, col0);
        }
        seen_bundle = true;
        section = Section::Bundle;
      } else if (line == "[[blowup]]") {
        if (section == Section::Cover) {
          throw ParseError("[[blowup]] after [cover]", line_no, col0);
        }
        section = Section::Blowup;
        spec.blowups.emplace_back();
      } else if (line == "[cover]") {
        if (spec.cover) throw ParseError("duplicate [cover]", line_no, col0);
        section = Section::Cover;
        spec.cover.emplace();
      } else {
        throw ParseError("unknown section '" + std::string(line) + "'", line_no, col0);
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, col0);
    const std::string key(trim(line.substr(0, eq)));
    std::size_t value_col = col0 + eq + 1;
    std::string_view value_text = line.substr(eq + 1);
    ValueReader value(value_text, line_no, value_col);
    if (section == Section::None) throw ParseError("key outside any section", line_no, col0);
    if (!seen_keys.insert(key).second) {
      throw ParseError("duplicate key '" + key + "'", line_no, col0);
    }
    auto unknown = [&]() { throw ParseError("unknown key '" + key + "'", line_no, col0); };

    switch (section) {
      case Section::Base:
        if (key != "index") unknown();
        spec.base_index = value.string();
        at_location(spec.base_index, [&] {
          spec.bundle.base_index = evaluate_scalar(spec.base_index.text);
          return 0;
        });
        break;
      case Section::Bundle:
        if (key == "x") {
          spec.bundle.x = value.integer();
          bundle_x = true;
        } else if (key == "y") {
          spec.bundle.y = value.integer();
          bundle_y = true;
        } else {
          unknown();
        }
        break;
      case Section::Blowup: {
        auto& b = spec.blowups.back();
        if (key == "center") {
          auto parts = value.string_array();
          if (parts.size() != 2) value.fail("center needs exactly two divisor expressions");
          for (const auto& p : parts) check_symbols(p, defined);
          b.divA = parts[0];
          b.divB = parts[1];
        } else if (key == "name") {
          b.name = value.string().text;
        } else {
          unknown();
        }
        break;
      }
      case Section::Cover: {
        auto& c = *spec.cover;
        if (key == "branch") {
          c.branch = value.string();
          check_symbols(c.branch, defined);
        } else if (key == "boundary") {
          c.boundary = value.string();
          check_symbols(*c.boundary, defined);
        } else if (key == "k3_surface") {
          c.k3_surface = value.string().text;
        } else {
          unknown();
        }
        break;
      }
      case Section::None: break;
    }
    value.finish();
  }
  close_section();
  if (!seen_bundle) throw ParseError("missing [bundle] section", line_no, 1);
  return spec;
}

const ThreefoldModel& Tower::stage(std::size_t i) const {
  if (i >= stages.size()) {
    throw BasisError("stage " + std::to_string(i) + " does not exist (tower has " +
                     std::to_string(stages.size()) + ")");
  }
  return stages[i];
}

DivClass Tower::divisor(std::string_view text, std::size_t i) const {
  return evaluate_divisor(text, model_resolver(stage(i), bundle_a(), stages.front().canonical()));
}

Tower build_tower(const TowerSpec& spec, NRange range) {
  Tower tower;
  tower.spec = spec;
  tower.range = range;
  tower.stages.push_back(build_scroll(spec.bundle));
  for (const auto& b : spec.blowups) {
    const ThreefoldModel& current = tower.stages.back();
    const SymbolResolver resolve = model_resolver(current, tower.bundle_a(), tower.stages.front().canonical());
    const DivClass divA = at_location(b.divA, [&] { return evaluate_divisor(b.divA.text, resolve); });
    const DivClass divB = at_location(b.divB, [&] { return evaluate_divisor(b.divB.text, resolve); });
    tower.centers.push_back(center(current, divA, divB));
    tower.stages.push_back(blow_up(current, tower.centers.back(), b.name, range));
  }
  if (spec.cover) {
    const ThreefoldModel& top = tower.stages.back();
    const SymbolResolver resolve = model_resolver(top, tower.bundle_a(), tower.stages.front().canonical());
    const DivClass branch = at_location(spec.cover->branch, [&] {
      return evaluate_divisor(spec.cover->branch.text, resolve);
    });
    tower.cover = double_cover(top, branch);
    if (spec.cover->boundary) {
      const auto& where = *spec.cover->boundary;
      tower.boundary = at_location(where, [&] { return evaluate_divisor(where.text, resolve); });
    }
  }
  return tower;
}

}  // namespace chowtower
