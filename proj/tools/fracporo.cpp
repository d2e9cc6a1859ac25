// Command line driver: run | fine | basis | verify.

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "fracporo/app/experiment.hpp"
#include "fracporo/app/verification.hpp"
#include "fracporo/errors.hpp"
#include "fracporo/mesh/mesh_generator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

int verify() {
  bool ok = true;
  for (double alpha : {0.5, 0.8, 0.9, 1.0}) {
    const auto study = fracporo::fractional_decay_study(alpha, 1.0, 1.0, 1.0, {40, 80, 160});
    const bool pass = study.orders.back() >= (2.0 - alpha) - 0.2 && study.errors.back() < 5e-3;
    ok = ok && pass;
    std::printf("%s fractional decay alpha=%.2f error(1/160)=%.3e order=%.3f\n", pass ? "PASS" : "FAIL", alpha,
                study.errors.back(), study.orders.back());
  }
  fracporo::LatticeMeshSpec spec;
  spec.cells_x = spec.cells_y = 8;
  spec.jitter = 0.15;
  const double mms = fracporo::manufactured_solution_error(fracporo::generate_lattice_mesh(spec), 10, 1.0);
  const bool pass = mms < 1e-9;
  ok = ok && pass;
  std::printf("%s manufactured solution max nodal error=%.3e\n", pass ? "PASS" : "FAIL", mms);
  return ok ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional multicontinuum poroelasticity: fine reference and GMsFEM solver"};
  app.require_subcommand(1);
  std::string scenario_path;
  std::string out_dir;
  int threads = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", scenario_path, "scenario file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory")->required();
    sub->add_option("--threads", threads, "worker threads for patch computations")->check(CLI::PositiveNumber);
  };
  auto* run = app.add_subcommand("run", "fine reference plus multiscale sweep with error tables");
  auto* fine = app.add_subcommand("fine", "fine reference solution only");
  auto* basis = app.add_subcommand("basis", "dump the multiscale basis as MatrixMarket files");
  auto* verify_cmd = app.add_subcommand("verify", "fractional decay and manufactured solution checks");
  for (auto* sub : {run, fine, basis}) add_common(sub);
  CLI11_PARSE(app, argc, argv);

  try {
    if (verify_cmd->parsed()) return verify();
    const fracporo::Scenario scenario = fracporo::parse_scenario(scenario_path);
    fracporo::ExperimentOptions options;
    options.out_dir = out_dir;
    options.threads = threads;
    options.log = [](const std::string& msg) { std::cerr << msg << '\n'; };
    if (run->parsed()) fracporo::run_experiment(scenario, options);
    if (fine->parsed()) fracporo::run_fine_only(scenario, options);
    if (basis->parsed()) fracporo::dump_basis(scenario, options);
  } catch (const fracporo::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const fracporo::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
