#pragma once

#include <string>
#include <vector>

#include "fracporo/mesh/fine_mesh.hpp"

namespace fracporo {

enum class Support { kBulk, kFracture };

/// Coefficients of one flow continuum. Fields are indexed by triangle for
/// bulk continua and by fracture edge for the fracture continuum. Fracture
/// aperture is folded into storage and permeability.
struct ContinuumSpec {
  std::string name;
  Support support = Support::kBulk;
  std::vector<double> storage;       // c = 1 / Biot modulus
  std::vector<double> permeability;  // k = kappa / viscosity
  double biot = 0.0;                 // Biot coefficient gamma
  double alpha = 1.0;                // order on the pressure history
  double beta = 1.0;                 // order on the volumetric-strain history

  bool is_fracture() const { return support == Support::kFracture; }
};

/// Mass transfer eta between two continua. Bulk-bulk: eta per triangle
/// (1/time). Bulk-fracture: eta per fracture edge, per unit fracture length.
struct ExchangeSpec {
  int first = 0;
  int second = 0;
  std::vector<double> eta;
};

struct Lame {
  double lambda;
  double mu;
};

/// Plane-strain Lame parameters. Throws DataError unless E > 0 and 0 < nu < 0.5.
Lame lame_parameters(double youngs, double poisson);

struct ElasticitySpec {
  std::vector<double> youngs;  // per triangle
  double poisson = 0.3;
};

struct PoroModel {
  std::vector<ContinuumSpec> continua;
  std::vector<ExchangeSpec> exchanges;
  ElasticitySpec elasticity;

  int num_continua() const { return static_cast<int>(continua.size()); }
  /// Index of the fracture continuum or -1.
  int fracture_index() const;
  /// Throws DataError / ConfigError on inconsistent sizes or ranges.
  void validate(const FineMesh& mesh) const;
};

}  // namespace fracporo
