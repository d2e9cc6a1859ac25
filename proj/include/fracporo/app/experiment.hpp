#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracporo/analysis/error_table.hpp"
#include "fracporo/analysis/vtk.hpp"
#include "fracporo/app/scenario.hpp"
#include "fracporo/gmsfem/coarse_solver.hpp"

namespace fracporo {

/// Mesh, coarse grid, patches and partition of unity of a scenario.
struct Discretization {
  FineMesh mesh;
  CoarseGrid grid;
  std::vector<Patch> patches;
  PartitionOfUnity pou;

  explicit Discretization(const Scenario& s);
};

using Logger = std::function<void(const std::string&)>;

struct ExperimentOptions {
  std::filesystem::path out_dir;
  int threads = 1;
  Logger log;
};

/// Errors of one fractional order: final-time table and per-step tables.
struct OrderResult {
  std::optional<double> order;  // empty: orders as configured
  ErrorTable final_errors;
  std::vector<ErrorTable> step_errors;  // index: time step
};

struct ExperimentResult {
  std::vector<OrderResult> orders;
};

/// Fine reference once per order, multiscale space once at the largest basis
/// count (truncated for smaller ones), coarse runs for every basis count.
/// Writes errors*.csv, errors_steps*.csv, vtk/*.vtk and manifest.json.
ExperimentResult run_experiment(const Scenario& s, const ExperimentOptions& options);

/// Fine reference only: writes vtk/fine*.vtk and manifest.json.
void run_fine_only(const Scenario& s, const ExperimentOptions& options);

/// Writes the projection blocks of the largest basis count as MatrixMarket
/// files basis_<block>.mtx and a manifest.
void dump_basis(const Scenario& s, const ExperimentOptions& options);

/// Errors of a multiscale state against the reference, bulk pressures only.
struct ErrorWeights {
  std::vector<int> bulk;  // continuum indices reported as p1, p2, ...
  std::vector<SpMat> pressure_mass;
  std::vector<SpMat> pressure_energy;
  SpMat displacement_mass;
  SpMat displacement_energy;
};

ErrorWeights error_weights(const PoroModel& model, const FineMesh& mesh, const BiotOperators& fine_ops);
ErrorRow compare_states(const Vec& reference, const Vec& approx, const DofLayout& layout, const ErrorWeights& w);

/// Nodal pressure fields p_<name>; fracture values are 0 away from the network.
std::vector<NodalScalar> pressure_fields(const Vec& state, const DofLayout& layout, const PoroModel& model,
                                         const FineMesh& mesh);

/// File suffix for an order, e.g. "_a0.80"; empty when unset.
std::string order_suffix(const std::optional<double>& order);

}  // namespace fracporo
