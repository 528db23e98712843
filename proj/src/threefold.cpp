#include "chowtower/threefold.hpp"

#include <algorithm>

#include "chowtower/error.hpp"

namespace chowtower {

// DivClass

DivClass::DivClass(std::initializer_list<std::pair<const std::string, IntPoly>> terms) {
  for (const auto& [name, value] : terms) set(name, coeff(name) + value);
}

DivClass DivClass::basis(const std::string& name) { return DivClass{{name, 1}}; }

IntPoly DivClass::coeff(const std::string& name) const {
  auto it = terms_.find(name);
  return it == terms_.end() ? IntPoly{} : it->second;
}

void DivClass::set(const std::string& name, const IntPoly& value) {
  if (value.is_zero()) {
    terms_.erase(name);
  } else {
    terms_[name] = value;
  }
}

DivClass& DivClass::operator+=(const DivClass& other) {
  for (const auto& [name, value] : other.terms_) set(name, coeff(name) + value);
  return *this;
}

DivClass& DivClass::operator-=(const DivClass& other) { return *this += -other; }

DivClass DivClass::operator-() const { return IntPoly(-1) * *this; }

DivClass operator*(const IntPoly& k, const DivClass& d) {
  DivClass out;
  for (const auto& [name, value] : d.terms_) out.set(name, k * value);
  return out;
}

bool DivClass::divisible_by(IntPoly::Coeff d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& kv) { return kv.second.divisible_by(d); });
}

DivClass DivClass::exact_div(IntPoly::Coeff d) const {
  DivClass out;
  for (const auto& [name, value] : terms_) out.set(name, value.exact_div(d));
  return out;
}

// Cycle2

Cycle2::Key Cycle2::key(const std::string& x, const std::string& y) {
  return x <= y ? Key{x, y} : Key{y, x};
}

Cycle2 Cycle2::product(const DivClass& a, const DivClass& b) {
  Cycle2 out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) out.add(x, y, cx * cy);
  }
  return out;
}

void Cycle2::add(const std::string& x, const std::string& y, const IntPoly& value) {
  const Key k = key(x, y);
  IntPoly sum = coeff(x, y) + value;
  if (sum.is_zero()) {
    terms_.erase(k);
  } else {
    terms_[k] = std::move(sum);
  }
}

IntPoly Cycle2::coeff(const std::string& x, const std::string& y) const {
  auto it = terms_.find(key(x, y));
  return it == terms_.end() ? IntPoly{} : it->second;
}

Cycle2& Cycle2::operator+=(const Cycle2& other) {
  for (const auto& [k, v] : other.terms_) add(k.first, k.second, v);
  return *this;
}

Cycle2& Cycle2::operator-=(const Cycle2& other) {
  for (const auto& [k, v] : other.terms_) add(k.first, k.second, -v);
  return *this;
}

// TripleForm

TripleForm::Key TripleForm::key(std::size_t i, std::size_t j, std::size_t k) {
  Key out{i, j, k};
  std::sort(out.begin(), out.end());
  return out;
}

IntPoly TripleForm::get(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = entries_.find(key(i, j, k));
  return it == entries_.end() ? IntPoly{} : it->second;
}

void TripleForm::set(std::size_t i, std::size_t j, std::size_t k, const IntPoly& value) {
  if (i >= rank_ || j >= rank_ || k >= rank_) {
    throw BasisError("triple form index out of range");
  }
  if (value.is_zero()) {
    entries_.erase(key(i, j, k));
  } else {
    entries_[key(i, j, k)] = value;
  }
}

TripleForm TripleForm::extended(std::size_t new_rank) const {
  TripleForm out(*this);
  out.rank_ = std::max(rank_, new_rank);
  return out;
}

// ThreefoldModel

ThreefoldModel::ThreefoldModel(std::string name, Basis basis, TripleForm triple, DivClass c1,
                               Cycle2 c2, IntPoly euler,
                               std::vector<EmbeddedSurface> surfaces)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      triple_(std::move(triple)),
      c1_(std::move(c1)),
      c2_(std::move(c2)),
      euler_(std::move(euler)),
      surfaces_(std::move(surfaces)) {
  if (triple_.rank() != basis_.size()) {
    throw BasisError("triple form rank does not match basis of " + name_);
  }
  require_member(c1_);
  for (const auto& [k, v] : c2_.terms()) {
    index_of(k.first);
    index_of(k.second);
  }
  for (const auto& s : surfaces_) {
    require_member(s.cls);
    for (const auto& b : basis_) {
      if (!s.restriction.count(b)) {
        throw BasisError("surface " + s.name + " has no restriction for " + b);
      }
    }
    auto defects = compatibility_defects(basis_, triple_, s);
    if (!defects.empty()) {
      const auto& d = defects.front();
      throw DomainError("surface " + s.name + " on " + name_ + " is incompatible: (" + d.d1 +
                        ", " + d.d2 + ") ambient " + d.ambient.to_string() +
                        " vs surface " + d.on_surface.to_string());
    }
  }
}

bool ThreefoldModel::has_basis(const std::string& name) const {
  return std::find(basis_.begin(), basis_.end(), name) != basis_.end();
}

std::size_t ThreefoldModel::index_of(const std::string& name) const {
  auto it = std::find(basis_.begin(), basis_.end(), name);
  if (it == basis_.end()) {
    throw BasisError("'" + name + "' is not a basis divisor of " + name_);
  }
  return static_cast<std::size_t>(it - basis_.begin());
}

bool ThreefoldModel::has_surface(const std::string& name) const {
  return std::any_of(surfaces_.begin(), surfaces_.end(),
                     [&](const EmbeddedSurface& s) { return s.name == name; });
}

const EmbeddedSurface& ThreefoldModel::surface(const std::string& name) const {
  for (const auto& s : surfaces_) {
    if (s.name == name) return s;
  }
  throw BasisError("no surface '" + name + "' registered on " + name_);
}

void ThreefoldModel::require_member(const DivClass& d) const {
  for (const auto& [name, value] : d.terms()) index_of(name);
}

std::string render_terms(const std::vector<std::pair<IntPoly, std::string>>& terms) {
  std::string out;
  for (const auto& [k, symbol] : terms) {
    if (k.is_zero()) continue;
    const bool first = out.empty();
    if (auto c = k.constant_value()) {
      IntPoly mag = k;
      if (*c < 0) {
        out += first ? "-" : " - ";
        mag = -k;
      } else if (!first) {
        out += " + ";
      }
      if (mag != IntPoly(1)) out += mag.to_string() + "*";
    } else {
      if (!first) out += " + ";
      out += "(" + k.to_compact_string() + ")*";
    }
    out += symbol;
  }
  return out.empty() ? "0" : out;
}

std::string ThreefoldModel::render(const DivClass& d) const {
  require_member(d);
  std::vector<std::pair<IntPoly, std::string>> terms;
  for (const auto& b : basis_) terms.emplace_back(d.coeff(b), b);
  return render_terms(terms);
}

std::string ThreefoldModel::render(const Cycle2& c) const {
  std::vector<std::pair<IntPoly, std::string>> terms;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i; j < basis_.size(); ++j) {
      terms.emplace_back(c.coeff(basis_[i], basis_[j]), basis_[i] + "*" + basis_[j]);
    }
  }
  return render_terms(terms);
}

// Operations

IntPoly triple_product(const ThreefoldModel& t, const DivClass& d1, const DivClass& d2,
                       const DivClass& d3) {
  IntPoly total;
  for (const auto& [x, cx] : d1.terms()) {
    const std::size_t i = t.index_of(x);
    for (const auto& [y, cy] : d2.terms()) {
      const std::size_t j = t.index_of(y);
      const IntPoly cxy = cx * cy;
      for (const auto& [z, cz] : d3.terms()) {
        const IntPoly entry = t.triple().get(i, j, t.index_of(z));
        if (!entry.is_zero()) total += cxy * cz * entry;
      }
    }
  }
  return total;
}

IntPoly pair_cycle(const ThreefoldModel& t, const Cycle2& c, const DivClass& d) {
  IntPoly total;
  for (const auto& [k, v] : c.terms()) {
    total += v * triple_product(t, DivClass::basis(k.first), DivClass::basis(k.second), d);
  }
  return total;
}

IntPoly integrate_c2(const ThreefoldModel& t, const DivClass& d) {
  t.require_member(d);
  return pair_cycle(t, t.c2(), d);
}

IntPoly euler_divisor(const ThreefoldModel& t, const DivClass& d) {
  return integrate_c2(t, d) - triple_product(t, t.c1(), d, d) + triple_product(t, d, d, d);
}

SurfacePicClass restrict(const EmbeddedSurface& s, const DivClass& d) {
  SurfacePicClass out = pic_class(s.model, 0, 0);
  for (const auto& [name, k] : d.terms()) {
    auto it = s.restriction.find(name);
    if (it == s.restriction.end()) {
      throw BasisError("surface " + s.name + " has no restriction for " + name);
    }
    out = out + it->second.scaled(k);
  }
  return out;
}

SurfacePicClass restrict(const ThreefoldModel& t, const std::string& surface,
                         const DivClass& d) {
  t.require_member(d);
  return restrict(t.surface(surface), d);
}

std::vector<CompatibilityDefect> compatibility_defects(const Basis& basis,
                                                       const TripleForm& triple,
                                                       const EmbeddedSurface& s) {
  std::vector<CompatibilityDefect> out;
  auto ambient = [&](std::size_t i, std::size_t j) {
    IntPoly total;
    for (const auto& [name, k] : s.cls.terms()) {
      auto it = std::find(basis.begin(), basis.end(), name);
      if (it == basis.end()) throw BasisError("surface class uses unknown '" + name + "'");
      total += k * triple.get(static_cast<std::size_t>(it - basis.begin()), i, j);
    }
    return total;
  };
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const IntPoly lhs = ambient(i, j);
      const IntPoly rhs = intersect(s.model, s.restriction.at(basis[i]),
                                    s.restriction.at(basis[j]));
      if (lhs != rhs) out.push_back({s.name, basis[i], basis[j], lhs, rhs});
    }
  }
  return out;
}

}  // namespace chowtower
