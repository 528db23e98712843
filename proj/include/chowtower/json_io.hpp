#pragma once

#include "json.hpp"

#include "chowtower/poly.hpp"
#include "chowtower/surface.hpp"
#include "chowtower/threefold.hpp"

// JSON encoding of models. Polynomials are coefficient arrays indexed by the
// power of n: 3n + 1 is [1, 3], zero is []. See docs/json_schema.md.
namespace chowtower {

using json = nlohmann::ordered_json;

json to_json(const IntPoly& p);
IntPoly poly_from_json(const json& j);

json to_json(const DivClass& d, const Basis& basis);
DivClass divclass_from_json(const json& j);

json to_json(const Cycle2& c, const Basis& basis);
Cycle2 cycle2_from_json(const json& j);

json to_json(const HirzebruchSurface& s);
HirzebruchSurface surface_from_json(const json& j);

json to_json(const SurfacePicClass& c);
SurfacePicClass picclass_from_json(const json& j, const HirzebruchSurface& s);

json to_json(const EmbeddedSurface& s, const Basis& basis);
EmbeddedSurface embedded_from_json(const json& j);

json to_json(const ThreefoldModel& m);
ThreefoldModel model_from_json(const json& j);

}  // namespace chowtower
