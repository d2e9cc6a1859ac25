#include "fracporo/app/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unsupported/Eigen/SparseExtra>

#include "fracporo/errors.hpp"
#include "fracporo/analysis/errors.hpp"
#include "fracporo/mesh/mesh_io.hpp"
#include "json.hpp"

namespace fracporo {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void note(const ExperimentOptions& o, const std::string& msg) {
  if (o.log) o.log(msg);
}

std::string step_label(int n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "_n%03d", n);
  return buf;
}

std::vector<std::optional<double>> orders_of(const Scenario& s) {
  std::vector<std::optional<double>> out;
  for (double a : s.alpha_sweep) out.emplace_back(a);
  if (out.empty()) out.emplace_back(std::nullopt);
  return out;
}

Json mesh_json(const Discretization& d) {
  return Json{{"nodes", d.mesh.num_nodes()},
              {"triangles", d.mesh.num_triangles()},
              {"fracture_edges", d.mesh.num_fracture_edges()},
              {"fracture_dofs", d.mesh.num_fracture_nodes()},
              {"coarse_vertices", d.grid.num_vertices()},
              {"coarse_cells", d.grid.num_cells()},
              {"pou_max_deviation", d.pou.max_sum_deviation(d.mesh, d.patches)}};
}

Json scenario_json(const Scenario& s) {
  Json names = Json::array();
  for (const auto& c : s.continua) names.push_back(c.name);
  return Json{{"schema_version", s.schema_version},
              {"seed", s.seed},
              {"mesh", s.mesh_path.filename().string()},
              {"continua", names},
              {"final_time", s.final_time},
              {"steps", s.steps},
              {"tau", s.tau()}};
}

Json diagnostics_json(const SpectralDiagnostics& d) {
  return Json{{"max_eigen_residual", d.max_residual},
              {"min_relative_eigenvalue", d.min_relative_eigenvalue},
              {"max_normalization_error", d.max_normalization_error},
              {"max_constant_quotient", d.max_constant_quotient},
              {"max_snapshot_residual", d.max_snapshot_residual},
              {"interior_patches_without_zero_mode", d.interior_patches_without_zero_mode}};
}

void write_manifest(const std::filesystem::path& dir, const Json& manifest) {
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  if (!out) throw Error("cannot write " + (dir / "manifest.json").string());
  out << manifest.dump(2) << '\n';
}

void write_step_table(const std::filesystem::path& path, const std::vector<ErrorTable>& steps) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  for (std::size_t n = 0; n < steps.size(); ++n) {
    std::ostringstream table;
    write_error_table(steps[n], table);
    std::istringstream lines(table.str());
    std::string line;
    std::getline(lines, line);
    if (n == 0) out << "step," << line << '\n';
    while (std::getline(lines, line)) out << n << ',' << line << '\n';
  }
}

std::filesystem::path prepare_output(const ExperimentOptions& o, bool vtk) {
  if (o.out_dir.empty()) throw ConfigError("an output directory is required");
  std::filesystem::create_directories(o.out_dir);
  if (vtk) std::filesystem::create_directories(o.out_dir / "vtk");
  return o.out_dir;
}

bool wants_vtk(const Scenario& s, int n) {
  return std::find(s.vtk_steps.begin(), s.vtk_steps.end(), n) != s.vtk_steps.end();
}

void write_state(const std::filesystem::path& path, const Vec& state, const DofLayout& layout,
                 const PoroModel& model, const FineMesh& mesh) {
  write_vtk(path, mesh, pressure_fields(state, layout, model, mesh), layout.displacement(state),
            path.stem().string());
}

}  // namespace

Discretization::Discretization(const Scenario& s)
    : mesh(load_fine_mesh(s.mesh_path.string())),
      grid(build_coarse_grid(mesh.bounds(), s.coarse_nx, s.coarse_ny)),
      patches(build_patches(grid, mesh)),
      pou(grid, mesh, patches) {}

std::string order_suffix(const std::optional<double>& order) {
  if (!order) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "_a%.2f", *order);
  return buf;
}

ErrorWeights error_weights(const PoroModel& model, const FineMesh& mesh, const BiotOperators& fine_ops) {
  ErrorWeights w;
  const MeshScope whole = MeshScope::whole(mesh);
  for (int i = 0; i < model.num_continua(); ++i) {
    if (model.continua[i].is_fracture()) continue;
    w.bulk.push_back(i);
    w.pressure_mass.push_back(assemble_plain_mass(Support::kBulk, mesh, whole));
    w.pressure_energy.push_back(fine_ops.stiffness[i]);
  }
  w.displacement_mass = assemble_vector_mass(std::vector<double>(mesh.num_triangles(), 1.0), mesh, whole);
  w.displacement_energy = fine_ops.elasticity;
  return w;
}

ErrorRow compare_states(const Vec& reference, const Vec& approx, const DofLayout& layout, const ErrorWeights& w) {
  ErrorRow row;
  const Vec u_ref = layout.displacement(reference), u_ms = layout.displacement(approx);
  row.displacement = {relative_l2_error(u_ref, u_ms, w.displacement_mass),
                      relative_energy_error(u_ref, u_ms, w.displacement_energy)};
  for (std::size_t k = 0; k < w.bulk.size(); ++k) {
    const Vec p_ref = layout.pressure(reference, w.bulk[k]), p_ms = layout.pressure(approx, w.bulk[k]);
    row.pressures.push_back(
        {relative_l2_error(p_ref, p_ms, w.pressure_mass[k]), relative_energy_error(p_ref, p_ms, w.pressure_energy[k])});
  }
  return row;
}

std::vector<NodalScalar> pressure_fields(const Vec& state, const DofLayout& layout, const PoroModel& model,
                                         const FineMesh& mesh) {
  std::vector<NodalScalar> out;
  for (int i = 0; i < model.num_continua(); ++i) {
    NodalScalar f{"p_" + model.continua[i].name, Vec::Zero(mesh.num_nodes())};
    const Vec p = layout.pressure(state, i);
    if (model.continua[i].is_fracture()) {
      for (int d = 0; d < mesh.num_fracture_nodes(); ++d) f.values[mesh.fracture_nodes()[d]] = p[d];
    } else {
      f.values = p;
    }
    out.push_back(std::move(f));
  }
  return out;
}

ExperimentResult run_experiment(const Scenario& s, const ExperimentOptions& options) {
  const auto dir = prepare_output(options, !s.vtk_steps.empty());
  const auto t_total = Clock::now();
  Json manifest{{"command", "run"}, {"scenario", scenario_json(s)}};
  Json timings;

  auto t = Clock::now();
  const Discretization disc(s);
  timings["discretization"] = seconds_since(t);
  manifest["mesh"] = mesh_json(disc);
  note(options, "mesh: " + std::to_string(disc.mesh.num_triangles()) + " triangles, " +
                    std::to_string(disc.mesh.num_fracture_edges()) + " fracture edges");

  const int max_basis = s.basis_sweep.back();
  const PoroModel base_model = build_model(s, disc.mesh);
  t = Clock::now();
  const PatchBases bases = compute_patch_bases(disc.patches, base_model, disc.mesh, max_basis, options.threads);
  timings["local_spectral"] = seconds_since(t);
  manifest["spectral"] = diagnostics_json(bases.diagnostics);
  note(options, "local spectral problems solved on " + std::to_string(disc.patches.size()) + " patches");

  // Orders only enter the time stepping; the operators are shared.
  const BiotOperators fine_ops = assemble_operators(base_model, disc.mesh);
  const FineProblem base_problem = build_fine_problem(s, disc.mesh);
  const ConstraintSet constraints = build_constraints(base_problem.bc, base_model, disc.mesh, fine_ops.layout);
  const ErrorWeights weights = error_weights(base_model, disc.mesh, fine_ops);
  std::vector<SpMat> plain_mass;
  for (const auto& c : base_model.continua)
    plain_mass.push_back(assemble_plain_mass(c.support, disc.mesh, MeshScope::whole(disc.mesh)));

  t = Clock::now();
  const MultiscaleSpace full_space = build_multiscale_space(bases, disc.patches, disc.pou, base_model,
                                                            fine_ops.layout, constraints, max_basis);
  std::vector<MultiscaleSpace> spaces;
  std::vector<BiotOperators> coarse_ops;
  Json dofs = Json::array();
  for (int m : s.basis_sweep) {
    spaces.push_back(m == max_basis ? full_space : full_space.truncate(m));
    coarse_ops.push_back(project_operators(fine_ops, spaces.back()));
    dofs.push_back(Json{{"M", m}, {"nominal", spaces.back().nominal_dofs()}, {"effective", spaces.back().effective_dofs()}});
  }
  timings["multiscale_space"] = seconds_since(t);
  manifest["coarse_dofs"] = dofs;
  manifest["fine_dofs"] = fine_ops.layout.total();

  ExperimentResult result;
  Json runs = Json::array();
  const int vtk_basis_index = static_cast<int>(
      std::find(s.basis_sweep.begin(), s.basis_sweep.end(), s.vtk_basis.value_or(max_basis)) - s.basis_sweep.begin());

  for (const auto& order : orders_of(s)) {
    const std::string suffix = order_suffix(order);
    Json run{{"order", order ? Json(*order) : Json(nullptr)}};
    t = Clock::now();
    FineSolver fine(disc.mesh, build_fine_problem(s, disc.mesh, order));
    const TimeHistory& reference = fine.run();
    run["fine_seconds"] = seconds_since(t);
    run["fine_max_residual"] = fine.stepper().max_residual();
    note(options, "fine reference" + suffix + " done");
    for (int n = 0; n <= s.steps; ++n)
      if (wants_vtk(s, n))
        write_state(dir / "vtk" / ("fine" + suffix + step_label(n) + ".vtk"), reference[n], fine_ops.layout,
                    base_model, disc.mesh);

    OrderResult res;
    res.order = order;
    res.step_errors.resize(s.steps + 1);
    Json coarse = Json::array();
    for (std::size_t k = 0; k < spaces.size(); ++k) {
      t = Clock::now();
      BiotOperators ops = coarse_ops[k];
      for (int i = 0; i < ops.num_continua(); ++i) {
        ops.alpha[i] = fine.operators().alpha[i];
        ops.beta[i] = fine.operators().beta[i];
      }
      CoarseSolver solver(std::move(ops), s.tau(), s.steps, base_problem.options);
      const Vec initial = project_pressures(reference[0], fine_ops.layout, plain_mass, spaces[k]);
      const TimeHistory& history = solver.run(initial);
      for (int n = 0; n <= s.steps; ++n) {
        const Vec approx = downscale(history[n], spaces[k], fine_ops.layout);
        ErrorRow row = compare_states(reference[n], approx, fine_ops.layout, weights);
        row.basis_per_vertex = s.basis_sweep[k];
        row.coarse_dofs = spaces[k].nominal_dofs();
        res.step_errors[n].rows.push_back(row);
        if (static_cast<int>(k) == vtk_basis_index && wants_vtk(s, n))
          write_state(dir / "vtk" / ("ms" + suffix + "_M" + std::to_string(s.basis_sweep[k]) + step_label(n) + ".vtk"),
                      approx, fine_ops.layout, base_model, disc.mesh);
      }
      coarse.push_back(Json{{"M", s.basis_sweep[k]},
                            {"seconds", seconds_since(t)},
                            {"max_residual", solver.stepper().max_residual()},
                            {"stored_states", history.size()}});
      note(options, "coarse run" + suffix + " M=" + std::to_string(s.basis_sweep[k]) + " done");
    }
    res.final_errors = res.step_errors.back();
    write_error_table(res.final_errors, dir / ("errors" + suffix + ".csv"));
    write_step_table(dir / ("errors_steps" + suffix + ".csv"), res.step_errors);
    run["coarse"] = coarse;
    runs.push_back(run);
    result.orders.push_back(std::move(res));
  }
  manifest["runs"] = runs;
  timings["total"] = seconds_since(t_total);
  manifest["timings"] = timings;
  write_manifest(dir, manifest);
  return result;
}

void run_fine_only(const Scenario& s, const ExperimentOptions& options) {
  const auto dir = prepare_output(options, !s.vtk_steps.empty());
  const auto t_total = Clock::now();
  const Discretization disc(s);
  Json manifest{{"command", "fine"}, {"scenario", scenario_json(s)}, {"mesh", mesh_json(disc)}};
  Json runs = Json::array();
  for (const auto& order : orders_of(s)) {
    const auto t = Clock::now();
    FineSolver fine(disc.mesh, build_fine_problem(s, disc.mesh, order));
    const TimeHistory& reference = fine.run();
    const std::string suffix = order_suffix(order);
    for (int n = 0; n <= s.steps; ++n)
      if (wants_vtk(s, n))
        write_state(dir / "vtk" / ("fine" + suffix + step_label(n) + ".vtk"), reference[n], fine.operators().layout,
                    fine.problem().model, disc.mesh);
    runs.push_back(Json{{"order", order ? Json(*order) : Json(nullptr)},
                        {"fine_dofs", fine.operators().layout.total()},
                        {"max_residual", fine.stepper().max_residual()},
                        {"seconds", seconds_since(t)}});
    note(options, "fine reference" + suffix + " done");
  }
  manifest["runs"] = runs;
  manifest["timings"] = Json{{"total", seconds_since(t_total)}};
  write_manifest(dir, manifest);
}

void dump_basis(const Scenario& s, const ExperimentOptions& options) {
  const auto dir = prepare_output(options, false);
  const Discretization disc(s);
  const PoroModel model = build_model(s, disc.mesh);
  const int max_basis = s.basis_sweep.back();
  const PatchBases bases = compute_patch_bases(disc.patches, model, disc.mesh, max_basis, options.threads);
  const BiotOperators ops = assemble_operators(model, disc.mesh);
  const ConstraintSet constraints = build_constraints(build_boundary_conditions(s), model, disc.mesh, ops.layout);
  const MultiscaleSpace space =
      build_multiscale_space(bases, disc.patches, disc.pou, model, ops.layout, constraints, max_basis);
  Json blocks = Json::array();
  for (int b = 0; b < space.num_blocks(); ++b) {
    const std::string name = b < space.num_continua() ? "p_" + model.continua[b].name : "u";
    const auto file = dir / ("basis_" + name + ".mtx");
    if (!Eigen::saveMarket(space.projection(b), file.string())) throw Error("cannot write " + file.string());
    blocks.push_back(Json{{"block", name}, {"file", file.filename().string()},
                          {"rows", space.projection(b).rows()}, {"cols", space.projection(b).cols()}});
  }
  write_manifest(dir, Json{{"command", "basis"},
                           {"scenario", scenario_json(s)},
                           {"mesh", mesh_json(disc)},
                           {"basis_per_vertex", max_basis},
                           {"nominal_dofs", space.nominal_dofs()},
                           {"effective_dofs", space.effective_dofs()},
                           {"spectral", diagnostics_json(bases.diagnostics)},
                           {"blocks", blocks}});
  note(options, "basis written to " + dir.string());
}

}  // namespace fracporo
