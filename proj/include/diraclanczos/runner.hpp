#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "diraclanczos/convergence.hpp"
#include "diraclanczos/dirac.hpp"
#include "diraclanczos/kernels/kernels.hpp"

namespace diraclanczos {

enum class StartVectorKind { bethe, random };

// Full description of one end-to-end run. Mirrors the config-file keys
// one to one; every field can also be set by a command-line flag.
struct RunConfig {
  DiracParams params;                  // z, kappa, alpha
  double gamma = 0.0998;
  int n_points = 200;
  double r_max = 40.0;
  int max_iterations = 60;
  int window = 5;
  double delta_tol = 1e-4;
  double plateau_tol = 1e-6;
  std::string output_prefix = "dirac_lanczos";
  std::uint64_t random_seed = 0;
  StartVectorKind start = StartVectorKind::bethe;
  // Optional override of the start vector's radial exponent (default s*gamma).
  std::optional<double> start_exponent;
  // |bound value - oracle| tolerance deciding exit code 0 vs 1.
  double oracle_tol = 1e-3;
  // Kernel backend: unset means automatic CPU detection.
  std::optional<kernels::Backend> kernel;

  // Throws ConfigError on any out-of-domain field.
  void validate() const;
};

struct RunReport {
  RunConfig config;
  std::vector<EigenTrace> traces;
  int iterations_executed = 0;
  bool breakdown = false;
  std::vector<double> iteration_ms;
  std::string kernel_backend;
  double oracle_energy = 0.0;
  int bound_trace_count = 0;
  int negative_trace_count = 0;
  // Set when exactly one trace classified bound.
  std::optional<double> bound_value;
  std::optional<double> bound_error;
  std::vector<std::string> warnings;
};

// Parses a flat key=value config file ('#' starts a comment). Unknown
// keys and malformed values raise ConfigError with the offending line.
RunConfig load_config_file(const std::string& path);
// Applies one key=value setting; shared by the file parser and tests.
void apply_config_entry(RunConfig& config, const std::string& key,
                        const std::string& value);

// Executes init, then step/diagonalize/delta/match/classify per
// iteration until max_iterations or breakdown.
RunReport run(const RunConfig& config);

// Writes <prefix>_eigenvalues.csv and <prefix>_report.json. Reals are
// printed with 17 significant digits so outputs are byte-reproducible
// and round-trip losslessly. Throws IoError with the path on failure.
void emit_outputs(const RunReport& report, const std::string& prefix);

// Human-readable closing table (one line per trace plus run info).
void print_summary(const RunReport& report, std::ostream& os);

// 0: a bound trace matches the oracle within oracle_tol. 1: run finished
// without such a trace. (2 and 3 are produced by the CLI for config and
// numerical failures respectively.)
int exit_code_for(const RunReport& report);

}  // namespace diraclanczos
