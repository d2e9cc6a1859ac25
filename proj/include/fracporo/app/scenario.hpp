#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracporo/app/synthetic_field.hpp"
#include "fracporo/solver/fine_solver.hpp"

namespace fracporo {

/// How a coefficient field is given: a constant, one value per region id,
/// a synthetic field (scale * generated values), or a file of "id value" lines.
struct FieldSource {
  enum class Kind { kConstant, kRegions, kSynthetic, kFile };
  Kind kind = Kind::kConstant;
  double value = 1.0;
  std::vector<double> regions;
  FieldStyle style = FieldStyle::kLognormalBlobs;
  double contrast = 1.0;
  double scale = 1.0;
  std::filesystem::path file;
};

struct ContinuumConfig {
  std::string name;
  Support support = Support::kBulk;
  double storage = 0.0;  // 1 / Biot modulus
  FieldSource permeability;
  double biot = 0.0;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> initial_pressure;
};

/// eta is either `value` or `multiplier` times the permeability of continuum `reference`.
struct ExchangeConfig {
  std::string first;
  std::string second;
  double value = 0.0;
  std::optional<double> multiplier;
  std::string reference;
};

struct Scenario {
  int schema_version = 1;
  std::uint64_t seed = 0;
  std::filesystem::path mesh_path;
  int coarse_nx = 10;
  int coarse_ny = 10;
  double final_time = 1.0;
  int steps = 1;

  std::vector<ContinuumConfig> continua;
  std::vector<ExchangeConfig> exchanges;
  FieldSource youngs;
  double poisson = 0.3;

  double alpha = 1.0;  // default orders
  double beta = 1.0;
  std::vector<double> alpha_sweep;  // empty: a single run with the configured orders

  std::uint8_t pressure_sides = 0;
  double pressure_value = 0.0;
  std::vector<std::string> pressure_continua;  // empty: all
  std::string displacement_condition = "rollers";
  double initial_pressure = 1.0;

  std::vector<int> basis_sweep{1, 2, 4, 8, 12, 16};
  std::vector<int> vtk_steps;
  std::optional<int> vtk_basis;

  double tau() const { return final_time / steps; }
  int continuum_index(const std::string& name) const;
};

/// Strict reader: unknown keys, wrong types, out-of-range values and missing
/// files raise ConfigError subclasses. Relative paths resolve against
/// `base_dir`.
Scenario parse_scenario(std::istream& in, const std::filesystem::path& base_dir,
                        const std::string& source = "<scenario>");
Scenario parse_scenario(const std::filesystem::path& path);

/// Per-triangle (or per-fracture-edge) values of a field source.
std::vector<double> resolve_field(const FieldSource& source, const FineMesh& mesh, Support support,
                                  std::uint64_t seed);

/// Coefficients on the mesh. When `order` is set, every alpha and beta is
/// replaced by it (sweeps over the fractional order).
PoroModel build_model(const Scenario& s, const FineMesh& mesh, std::optional<double> order = std::nullopt);
BoundaryConditions build_boundary_conditions(const Scenario& s);
FineProblem build_fine_problem(const Scenario& s, const FineMesh& mesh, std::optional<double> order = std::nullopt);

/// Stable per-field seed derived from the scenario seed and a field label.
std::uint64_t field_seed(std::uint64_t seed, const std::string& label);

}  // namespace fracporo
