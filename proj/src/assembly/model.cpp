#include "fracporo/assembly/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "fracporo/errors.hpp"

namespace fracporo {

Lame lame_parameters(double youngs, double poisson) {
  if (!(youngs > 0.0)) throw DataError("Young's modulus must be positive");
  if (!(poisson > 0.0 && poisson < 0.5)) throw DataError("Poisson ratio must lie in (0, 0.5)");
  return {youngs * poisson / ((1.0 + poisson) * (1.0 - 2.0 * poisson)), youngs / (2.0 * (1.0 + poisson))};
}

int PoroModel::fracture_index() const {
  for (int i = 0; i < num_continua(); ++i)
    if (continua[i].is_fracture()) return i;
  return -1;
}

void PoroModel::validate(const FineMesh& mesh) const {
  if (continua.empty()) throw ConfigError("model needs at least one continuum");
  int fractures = 0;
  std::set<std::string> names;
  for (const auto& c : continua) {
    if (!names.insert(c.name).second) throw ConfigError("duplicate continuum name '" + c.name + "'");
    const std::size_t n = c.is_fracture() ? mesh.num_fracture_edges() : mesh.num_triangles();
    if (c.is_fracture()) ++fractures;
    if (c.storage.size() != n || c.permeability.size() != n)
      throw DataError("continuum '" + c.name + "': coefficient field size does not match the mesh");
    for (double v : c.storage)
      if (!(v >= 0.0)) throw DataError("continuum '" + c.name + "': storage coefficient must be >= 0");
    for (double v : c.permeability)
      if (!(v > 0.0)) throw DataError("continuum '" + c.name + "': permeability must be > 0");
    if (!(c.alpha > 0.0 && c.alpha <= 1.0) || !(c.beta > 0.0 && c.beta <= 1.0))
      throw DomainError("continuum '" + c.name + "': fractional orders must lie in (0, 1]");
    if (c.is_fracture() && c.biot != 0.0)
      throw ConfigError("continuum '" + c.name + "': fracture continua are mechanically passive (biot = 0)");
  }
  if (fractures > 1) throw ConfigError("at most one fracture continuum is supported");
  if (fractures == 1 && mesh.num_fracture_edges() == 0)
    throw ConfigError("fracture continuum declared but the mesh has no fracture edges");
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : exchanges) {
    if (e.first < 0 || e.second < 0 || e.first >= num_continua() || e.second >= num_continua())
      throw ConfigError("exchange references an unknown continuum");
    if (e.first == e.second) throw ContractError("exchange of a continuum with itself is undefined");
    if (!pairs.insert({std::min(e.first, e.second), std::max(e.first, e.second)}).second)
      throw ConfigError("exchange pair declared twice");
    const bool bulk_fracture = continua[e.first].is_fracture() || continua[e.second].is_fracture();
    const std::size_t n = bulk_fracture ? mesh.num_fracture_edges() : mesh.num_triangles();
    if (e.eta.size() != n) throw DataError("exchange coefficient field size does not match the mesh");
    for (double v : e.eta)
      if (!(v >= 0.0)) throw DataError("exchange coefficient must be >= 0");
  }
  if (elasticity.youngs.size() != static_cast<std::size_t>(mesh.num_triangles()))
    throw DataError("Young's modulus field size does not match the mesh");
  for (double e : elasticity.youngs) lame_parameters(e, elasticity.poisson);
}

}  // namespace fracporo
