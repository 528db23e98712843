#pragma once

#include <string>

#include "chowtower/poly.hpp"
#include "chowtower/threefold.hpp"

namespace chowtower {

/// Smooth rational curve C = divA . divB, a transverse complete intersection.
/// Its normal bundle is O(divA)|C + O(divB)|C.
struct CICenter {
  DivClass divA;
  DivClass divB;
  IntPoly degA;  // divA^2 . divB
  IntPoly degB;  // divA . divB^2
  bool rational = true;

  /// c1 of the normal bundle.
  IntPoly normal_degree() const { return degA + degB; }
  /// The class of C as a codimension-two cycle.
  Cycle2 curve_class() const { return Cycle2::product(divA, divB); }
};

/// Computes the normal degrees and checks divA . divB . F = 1, which the
/// exceptional-surface construction needs. Throws CenterError otherwise.
CICenter center(const ThreefoldModel& t, const DivClass& divA, const DivClass& divB);

/// Blows up t along c, adding the exceptional divisor `name` to the basis.
///
/// Extends the triple form with E.D.D' = 0, E^2.D = -D.C and E^3 = -c1(N),
/// sets c1' = c1 - E, c2' = c2 + [C] - c1.E and e' = e + 2. Registered
/// surfaces are carried across (strict transforms of the two center
/// divisors, surfaces missing C unchanged) and the exceptional surface is
/// added. Sign questions are decided over `range`.
ThreefoldModel blow_up(const ThreefoldModel& t, const CICenter& c, const std::string& name,
                       NRange range = {});

/// The exceptional divisor of blow_up(t, c, name) as F_m, m = |degA - degB|,
/// with F |-> f, E |-> -g + min(degA, degB)*f and the remaining basis
/// divisors solved from the compatibility identities. `blown` must be the
/// blown-up model (its surfaces are not consulted).
EmbeddedSurface exceptional_surface(const ThreefoldModel& blown, const std::string& name,
                                    const CICenter& c, NRange range = {});

}  // namespace chowtower
