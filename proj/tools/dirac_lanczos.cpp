// Command-line driver: `run` executes a full Lanczos experiment from a
// config file plus flag overrides, `oracle` prints the analytic energy,
// `kernels` reports which vector-kernel backends this machine can use.
//
// Exit codes for `run`: 0 bound state found matching the oracle,
// 1 completed without one, 2 configuration problem, 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "diraclanczos/errors.hpp"
#include "diraclanczos/kernels/kernels.hpp"
#include "diraclanczos/reference.hpp"
#include "diraclanczos/runner.hpp"

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct RunFlags {
  std::optional<std::string> config_path;
  std::optional<int> z, kappa, n_points, max_iterations, window;
  std::optional<double> alpha, gamma, r_max, delta_tol, plateau_tol;
  std::optional<double> start_exponent, oracle_tol;
  std::optional<std::string> output_prefix, start, kernel;
  std::optional<std::uint64_t> random_seed;
};

int do_run(const RunFlags& flags) {
  using diraclanczos::RunConfig;
  RunConfig config;
  if (flags.config_path) {
    config = diraclanczos::load_config_file(*flags.config_path);
  }
  // Flags win over file values.
  if (flags.z) config.params.z = *flags.z;
  if (flags.kappa) config.params.kappa = *flags.kappa;
  if (flags.alpha) config.params.alpha = *flags.alpha;
  if (flags.gamma) config.gamma = *flags.gamma;
  if (flags.n_points) config.n_points = *flags.n_points;
  if (flags.r_max) config.r_max = *flags.r_max;
  if (flags.max_iterations) config.max_iterations = *flags.max_iterations;
  if (flags.window) config.window = *flags.window;
  if (flags.delta_tol) config.delta_tol = *flags.delta_tol;
  if (flags.plateau_tol) config.plateau_tol = *flags.plateau_tol;
  if (flags.output_prefix) config.output_prefix = *flags.output_prefix;
  if (flags.random_seed) config.random_seed = *flags.random_seed;
  if (flags.start) diraclanczos::apply_config_entry(config, "start", *flags.start);
  if (flags.start_exponent) config.start_exponent = *flags.start_exponent;
  if (flags.oracle_tol) config.oracle_tol = *flags.oracle_tol;
  if (flags.kernel) diraclanczos::apply_config_entry(config, "kernel", *flags.kernel);

  const diraclanczos::RunReport report = diraclanczos::run(config);
  diraclanczos::emit_outputs(report, report.config.output_prefix);
  diraclanczos::print_summary(report, std::cout);
  return diraclanczos::exit_code_for(report);
}

int do_oracle(int z, int kappa, int principal_n, double alpha) {
  diraclanczos::DiracParams params;
  params.z = z;
  params.kappa = kappa;
  params.alpha = alpha;
  std::cout << fmt17(diraclanczos::exact_energy(params, principal_n)) << '\n';
  return 0;
}

int do_kernels() {
  namespace k = diraclanczos::kernels;
  const auto active = k::active_backend();
  std::cout << "scalar: available"
            << (active == k::Backend::scalar ? " (active)" : "") << '\n';
  std::cout << "avx2:   "
            << (k::avx2_supported()
                    ? "available"
                    : (k::avx2_compiled() ? "compiled, CPU lacks support"
                                          : "not compiled"))
            << (active == k::Backend::avx2 ? " (active)" : "") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-free Lanczos bound states of the radial Coulomb-Dirac operator"};
  app.require_subcommand(1);

  RunFlags flags;
  CLI::App* run_cmd = app.add_subcommand("run", "execute a Lanczos run");
  run_cmd->add_option("--config", flags.config_path, "key=value config file");
  run_cmd->add_option("--z", flags.z, "nuclear charge");
  run_cmd->add_option("--kappa", flags.kappa, "angular quantum number");
  run_cmd->add_option("--alpha", flags.alpha, "fine-structure constant");
  run_cmd->add_option("--gamma", flags.gamma, "start vector perturbation factor");
  run_cmd->add_option("--n-points", flags.n_points, "radial grid points");
  run_cmd->add_option("--r-max", flags.r_max, "outer radius of the grid");
  run_cmd->add_option("--max-iterations", flags.max_iterations,
                      "Lanczos iteration cap");
  run_cmd->add_option("--window", flags.window, "classification window");
  run_cmd->add_option("--delta-tol", flags.delta_tol,
                      "delta threshold separating bound from spurious");
  run_cmd->add_option("--plateau-tol", flags.plateau_tol,
                      "eigenvalue stability threshold");
  run_cmd->add_option("--output-prefix", flags.output_prefix,
                      "prefix for the CSV and JSON outputs");
  run_cmd->add_option("--random-seed", flags.random_seed,
                      "seed for the random start vector");
  run_cmd->add_option("--start", flags.start, "start vector kind: bethe|random");
  run_cmd->add_option("--start-exponent", flags.start_exponent,
                      "override the start vector radial exponent");
  run_cmd->add_option("--oracle-tol", flags.oracle_tol,
                      "bound-vs-oracle tolerance deciding exit code 0");
  run_cmd->add_option("--kernel", flags.kernel,
                      "vector kernel backend: auto|scalar|avx2");

  int oracle_z = 100;
  int oracle_kappa = -1;
  int oracle_n = 1;
  double oracle_alpha = diraclanczos::kFineStructure;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "print the analytic bound-state energy");
  oracle_cmd->add_option("--z", oracle_z, "nuclear charge")->required();
  oracle_cmd->add_option("--kappa", oracle_kappa, "angular quantum number")
      ->required();
  oracle_cmd->add_option("--principal-n", oracle_n, "principal quantum number")
      ->required();
  oracle_cmd->add_option("--alpha", oracle_alpha, "fine-structure constant");

  CLI::App* kernels_cmd =
      app.add_subcommand("kernels", "list vector kernel backends");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run_cmd->parsed()) return do_run(flags);
    if (oracle_cmd->parsed()) {
      return do_oracle(oracle_z, oracle_kappa, oracle_n, oracle_alpha);
    }
    if (kernels_cmd->parsed()) return do_kernels();
  } catch (const diraclanczos::NumericalError& err) {
    std::cerr << "numerical failure: " << err.what() << '\n';
    return 3;
  } catch (const diraclanczos::Error& err) {
    // Config, parameter and I/O problems all mean the run never produced
    // a trustworthy result; report them as configuration errors.
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 2;
}
