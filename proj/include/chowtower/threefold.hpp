#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chowtower/poly.hpp"
#include "chowtower/surface.hpp"

namespace chowtower {

using Basis = std::vector<std::string>;

/// Divisor class on a threefold: sparse map from basis name to coefficient.
/// Zero coefficients are never stored, so equality is coefficientwise.
class DivClass {
 public:
  DivClass() = default;
  DivClass(std::initializer_list<std::pair<const std::string, IntPoly>> terms);

  static DivClass basis(const std::string& name);

  const std::map<std::string, IntPoly>& terms() const { return terms_; }
  IntPoly coeff(const std::string& name) const;
  void set(const std::string& name, const IntPoly& value);
  bool is_zero() const { return terms_.empty(); }

  DivClass& operator+=(const DivClass& other);
  DivClass& operator-=(const DivClass& other);
  friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
  friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
  DivClass operator-() const;
  friend DivClass operator*(const IntPoly& k, const DivClass& d);
  friend bool operator==(const DivClass&, const DivClass&) = default;

  /// True iff every coefficient is divisible by d.
  bool divisible_by(IntPoly::Coeff d) const;
  DivClass exact_div(IntPoly::Coeff d) const;

 private:
  std::map<std::string, IntPoly> terms_;
};

/// Codimension-two class written as a formal combination of products of two
/// basis divisors. The unordered pair {x, y} has a single entry.
class Cycle2 {
 public:
  using Key = std::pair<std::string, std::string>;

  static Cycle2 product(const DivClass& a, const DivClass& b);

  const std::map<Key, IntPoly>& terms() const { return terms_; }
  void add(const std::string& x, const std::string& y, const IntPoly& value);
  IntPoly coeff(const std::string& x, const std::string& y) const;

  Cycle2& operator+=(const Cycle2& other);
  Cycle2& operator-=(const Cycle2& other);
  friend Cycle2 operator+(Cycle2 a, const Cycle2& b) { return a += b; }
  friend Cycle2 operator-(Cycle2 a, const Cycle2& b) { return a -= b; }
  friend bool operator==(const Cycle2&, const Cycle2&) = default;

 private:
  static Key key(const std::string& x, const std::string& y);
  std::map<Key, IntPoly> terms_;
};

/// Fully symmetric trilinear form on a divisor basis, indexed by basis position.
/// Unset entries are zero.
class TripleForm {
 public:
  using Key = std::array<std::size_t, 3>;

  TripleForm() = default;
  explicit TripleForm(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  IntPoly get(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, const IntPoly& value);
  const std::map<Key, IntPoly>& entries() const { return entries_; }

  /// Copy with rank increased; existing entries unchanged.
  TripleForm extended(std::size_t new_rank) const;

  friend bool operator==(const TripleForm&, const TripleForm&) = default;

 private:
  static Key key(std::size_t i, std::size_t j, std::size_t k);
  std::size_t rank_ = 0;
  std::map<Key, IntPoly> entries_;
};

/// A smooth surface inside a threefold, identified with a Hirzebruch surface,
/// together with the restriction of every basis divisor to it.
struct EmbeddedSurface {
  std::string name;
  DivClass cls;
  HirzebruchSurface model;
  std::map<std::string, SurfacePicClass> restriction;
  /// How the restriction data was obtained ("given", "exceptional", "strict transform", ...).
  std::string provenance;

  friend bool operator==(const EmbeddedSurface&, const EmbeddedSurface&) = default;
};

/// One failed compatibility identity: triple(S, D, D') != (D|S).(D'|S).
struct CompatibilityDefect {
  std::string surface, d1, d2;
  IntPoly ambient, on_surface;
};

/// Intersection-theoretic model of a smooth projective threefold. Immutable
/// after construction; the constructor validates every registered surface
/// against the triple form and throws DomainError on a defect.
class ThreefoldModel {
 public:
  ThreefoldModel(std::string name, Basis basis, TripleForm triple, DivClass c1, Cycle2 c2,
                 IntPoly euler, std::vector<EmbeddedSurface> surfaces = {});

  const std::string& name() const { return name_; }
  const Basis& basis() const { return basis_; }
  const TripleForm& triple() const { return triple_; }
  const DivClass& c1() const { return c1_; }
  DivClass canonical() const { return -c1_; }
  const Cycle2& c2() const { return c2_; }
  const IntPoly& euler() const { return euler_; }
  const std::vector<EmbeddedSurface>& surfaces() const { return surfaces_; }

  bool has_basis(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // throws BasisError
  const EmbeddedSurface& surface(const std::string& name) const;  // throws BasisError
  bool has_surface(const std::string& name) const;

  /// Throws BasisError if d uses a name outside the basis.
  void require_member(const DivClass& d) const;

  /// "4*tau + 8*C0 + (2n+2)*F" in basis order.
  std::string render(const DivClass& d) const;
  /// "4*tau*C0 + (2n+4)*tau*F + (-2n+6)*C0*F" in basis order.
  std::string render(const Cycle2& c) const;

  friend bool operator==(const ThreefoldModel&, const ThreefoldModel&) = default;

 private:
  std::string name_;
  Basis basis_;
  TripleForm triple_;
  DivClass c1_;
  Cycle2 c2_;
  IntPoly euler_;
  std::vector<EmbeddedSurface> surfaces_;
};

IntPoly triple_product(const ThreefoldModel& t, const DivClass& d1, const DivClass& d2,
                       const DivClass& d3);

/// Integral of a codimension-two class against a divisor.
IntPoly pair_cycle(const ThreefoldModel& t, const Cycle2& c, const DivClass& d);

/// Integral of c2(T).D
IntPoly integrate_c2(const ThreefoldModel& t, const DivClass& d);

/// Topological Euler number of a smooth surface in the class d:
/// integral of (c2 - c1.D + D^2).D. Smoothness is the caller's assumption.
IntPoly euler_divisor(const ThreefoldModel& t, const DivClass& d);

/// Restriction of d to a registered surface.
SurfacePicClass restrict(const ThreefoldModel& t, const std::string& surface,
                         const DivClass& d);
SurfacePicClass restrict(const EmbeddedSurface& s, const DivClass& d);

/// All basis pairs where the surface's restriction data disagrees with the
/// ambient triple form. Empty means compatible.
std::vector<CompatibilityDefect> compatibility_defects(const Basis& basis,
                                                       const TripleForm& triple,
                                                       const EmbeddedSurface& s);

/// Generic coefficient rendering shared by divisor and cycle printers.
std::string render_terms(const std::vector<std::pair<IntPoly, std::string>>& terms);

}  // namespace chowtower
