#include "chowtower/json_io.hpp"

#include "chowtower/error.hpp"

namespace chowtower {

json to_json(const IntPoly& p) { return json(p.coeffs()); }

IntPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw Error("polynomial must be a coefficient array");
  return IntPoly(j.get<std::vector<IntPoly::Coeff>>());
}

json to_json(const DivClass& d, const Basis& basis) {
  json out = json::object();
  for (const auto& b : basis) {
    const IntPoly c = d.coeff(b);
    if (!c.is_zero()) out[b] = to_json(c);
  }
  for (const auto& [name, c] : d.terms()) {
    if (!out.contains(name)) out[name] = to_json(c);
  }
  return out;
}

DivClass divclass_from_json(const json& j) {
  DivClass out;
  for (const auto& [name, value] : j.items()) out.set(name, poly_from_json(value));
  return out;
}

json to_json(const Cycle2& c, const Basis& basis) {
  json out = json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t k = i; k < basis.size(); ++k) {
      const IntPoly v = c.coeff(basis[i], basis[k]);
      if (!v.is_zero()) out.push_back(json::array({basis[i], basis[k], to_json(v)}));
    }
  }
  return out;
}

Cycle2 cycle2_from_json(const json& j) {
  Cycle2 out;
  for (const auto& e : j) {
    out.add(e.at(0).get<std::string>(), e.at(1).get<std::string>(), poly_from_json(e.at(2)));
  }
  return out;
}

json to_json(const HirzebruchSurface& s) {
  return json{{"label", s.label}, {"index", to_json(s.index)}};
}

HirzebruchSurface surface_from_json(const json& j) {
  return {poly_from_json(j.at("index")), j.at("label").get<std::string>()};
}

json to_json(const SurfacePicClass& c) {
  return json::array({to_json(c.a()), to_json(c.b())});
}

SurfacePicClass picclass_from_json(const json& j, const HirzebruchSurface& s) {
  return pic_class(s, poly_from_json(j.at(0)), poly_from_json(j.at(1)));
}

json to_json(const EmbeddedSurface& s, const Basis& basis) {
  json restriction = json::object();
  for (const auto& b : basis) restriction[b] = to_json(s.restriction.at(b));
  return json{{"name", s.name},
              {"class", to_json(s.cls, basis)},
              {"model", to_json(s.model)},
              {"restriction", restriction},
              {"provenance", s.provenance}};
}

EmbeddedSurface embedded_from_json(const json& j) {
  EmbeddedSurface s;
  s.name = j.at("name").get<std::string>();
  s.cls = divclass_from_json(j.at("class"));
  s.model = surface_from_json(j.at("model"));
  for (const auto& [name, value] : j.at("restriction").items()) {
    s.restriction.emplace(name, picclass_from_json(value, s.model));
  }
  s.provenance = j.value("provenance", "");
  return s;
}

json to_json(const ThreefoldModel& m) {
  const Basis& basis = m.basis();
  json triple = json::array();
  for (const auto& [k, v] : m.triple().entries()) {
    triple.push_back(json::array({basis[k[0]], basis[k[1]], basis[k[2]], to_json(v)}));
  }
  json surfaces = json::array();
  for (const auto& s : m.surfaces()) surfaces.push_back(to_json(s, basis));
  return json{{"name", m.name()},
              {"basis", basis},
              {"triple", triple},
              {"c1", to_json(m.c1(), basis)},
              {"c2", to_json(m.c2(), basis)},
              {"euler", to_json(m.euler())},
              {"surfaces", surfaces}};
}

ThreefoldModel model_from_json(const json& j) {
  Basis basis = j.at("basis").get<Basis>();
  TripleForm triple(basis.size());
  auto index = [&](const json& name) {
    const auto s = name.get<std::string>();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == s) return i;
    }
    throw BasisError("triple entry names unknown basis divisor '" + s + "'");
  };
  for (const auto& e : j.at("triple")) {
    triple.set(index(e.at(0)), index(e.at(1)), index(e.at(2)), poly_from_json(e.at(3)));
  }
  std::vector<EmbeddedSurface> surfaces;
  for (const auto& s : j.at("surfaces")) surfaces.push_back(embedded_from_json(s));
  return ThreefoldModel(j.at("name").get<std::string>(), std::move(basis), std::move(triple),
                        divclass_from_json(j.at("c1")), cycle2_from_json(j.at("c2")),
                        poly_from_json(j.at("euler")), std::move(surfaces));
}

}  // namespace chowtower
