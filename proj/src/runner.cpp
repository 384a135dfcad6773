#include "diraclanczos/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "diraclanczos/errors.hpp"
#include "diraclanczos/reference.hpp"
#include "diraclanczos/tridiag_eigen.hpp"

namespace diraclanczos {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long out = 0;
  try {
    out = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) {
    throw ConfigError("key '" + key + "' needs an integer, got '" + value + "'");
  }
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) {
    throw ConfigError("key '" + key + "' needs a real number, got '" + value + "'");
  }
  return out;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void apply_config_entry(RunConfig& config, const std::string& key,
                        const std::string& value) {
  if (key == "z") {
    config.params.z = static_cast<int>(parse_int(key, value));
  } else if (key == "kappa") {
    config.params.kappa = static_cast<int>(parse_int(key, value));
  } else if (key == "alpha") {
    config.params.alpha = parse_real(key, value);
  } else if (key == "gamma") {
    config.gamma = parse_real(key, value);
  } else if (key == "n_points") {
    config.n_points = static_cast<int>(parse_int(key, value));
  } else if (key == "r_max") {
    config.r_max = parse_real(key, value);
  } else if (key == "max_iterations") {
    config.max_iterations = static_cast<int>(parse_int(key, value));
  } else if (key == "window") {
    config.window = static_cast<int>(parse_int(key, value));
  } else if (key == "delta_tol") {
    config.delta_tol = parse_real(key, value);
  } else if (key == "plateau_tol") {
    config.plateau_tol = parse_real(key, value);
  } else if (key == "output_prefix") {
    config.output_prefix = value;
  } else if (key == "random_seed") {
    config.random_seed =
        static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "start") {
    if (value == "bethe") {
      config.start = StartVectorKind::bethe;
    } else if (value == "random") {
      config.start = StartVectorKind::random;
    } else {
      throw ConfigError("key 'start' must be 'bethe' or 'random', got '" +
                        value + "'");
    }
  } else if (key == "start_exponent") {
    config.start_exponent = parse_real(key, value);
  } else if (key == "oracle_tol") {
    config.oracle_tol = parse_real(key, value);
  } else if (key == "kernel") {
    if (value == "auto") {
      config.kernel.reset();
    } else if (value == "scalar") {
      config.kernel = kernels::Backend::scalar;
    } else if (value == "avx2") {
      config.kernel = kernels::Backend::avx2;
    } else {
      throw ConfigError("key 'kernel' must be 'auto', 'scalar' or 'avx2', got '" +
                        value + "'");
    }
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) {
    throw IoError("cannot open config file: " + path);
  }
  RunConfig config;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key=value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      apply_config_entry(config, key, value);
    } catch (const ConfigError& err) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " +
                        err.what());
    }
  }
  return config;
}

void RunConfig::validate() const {
  try {
    params.validate();
  } catch (const Error& err) {
    throw ConfigError(err.what());
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ConfigError("gamma must be positive");
  }
  if (n_points < 1) throw ConfigError("n_points must be at least 1");
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw ConfigError("r_max must be positive and finite");
  }
  if (max_iterations < 1) throw ConfigError("max_iterations must be at least 1");
  if (window < 2) throw ConfigError("window must be at least 2");
  if (!(delta_tol > 0.0)) throw ConfigError("delta_tol must be positive");
  if (!(plateau_tol > 0.0)) throw ConfigError("plateau_tol must be positive");
  if (!(oracle_tol > 0.0)) throw ConfigError("oracle_tol must be positive");
  if (output_prefix.empty()) throw ConfigError("output_prefix must not be empty");
  if (start_exponent && !(std::isfinite(*start_exponent))) {
    throw ConfigError("start_exponent must be finite");
  }
}

RunReport run(const RunConfig& config) {
  config.validate();
  if (config.kernel) {
    try {
      kernels::select_backend(*config.kernel);
    } catch (const InvalidParameterError& err) {
      throw ConfigError(err.what());
    }
  } else {
    kernels::select_auto();
  }

  RunReport report;
  report.config = config;
  report.kernel_backend = std::string(kernels::backend_name(kernels::active_backend()));

  auto grid = std::make_shared<const RadialGrid>(config.n_points, config.r_max);
  const DiracParams& params = config.params;
  for (auto& w : params.warnings()) report.warnings.push_back(w);

  Spinor start(grid);
  if (config.start == StartVectorKind::bethe) {
    StartVectorSpec spec;
    spec.gamma = config.gamma;
    spec.params = params;
    spec.exponent_override = config.start_exponent;
    start = bethe_start(spec, grid, &report.warnings);
  } else {
    std::mt19937_64 rng(config.random_seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& x : start.packed()) x = dist(rng);
  }

  LanczosState state = init(start, params);

  using clock = std::chrono::steady_clock;
  for (int n = 1; n <= config.max_iterations; ++n) {
    const auto t0 = clock::now();
    step(state, params, *grid);
    const std::vector<RitzPair> pairs = eigen_tridiag(state.tridiagonal());
    std::vector<double> deltas;
    deltas.reserve(pairs.size());
    for (const auto& pair : pairs) deltas.push_back(compute_delta(pair, state));
    report.traces = match_traces(report.traces, pairs, deltas, n);
    for (auto& trace : report.traces) {
      if (trace.last_iteration() != n) continue;
      const Classification cls =
          classify(trace, config.window, config.delta_tol, config.plateau_tol);
      trace.classifications.push_back(cls);
      trace.classification = cls;
    }
    report.iteration_ms.push_back(
        std::chrono::duration<double, std::milli>(clock::now() - t0).count());
    report.iterations_executed = n;
    if (state.status() == LanczosStatus::breakdown) {
      report.breakdown = true;
      break;
    }
  }

  report.oracle_energy = exact_energy(params, 1);
  double best_bound_error = std::numeric_limits<double>::infinity();
  std::optional<double> best_bound_value;
  for (const auto& trace : report.traces) {
    if (trace.currently_negative()) ++report.negative_trace_count;
    if (trace.classification != Classification::bound) continue;
    ++report.bound_trace_count;
    const double err = std::abs(trace.final_value() - report.oracle_energy);
    if (err < best_bound_error) {
      best_bound_error = err;
      best_bound_value = trace.final_value();
    }
  }
  if (report.bound_trace_count > 0) {
    report.bound_value = best_bound_value;
    report.bound_error = best_bound_error;
  }
  return report;
}

int exit_code_for(const RunReport& report) {
  if (report.bound_error && *report.bound_error <= report.config.oracle_tol) {
    return 0;
  }
  return 1;
}

namespace {

nlohmann::json config_json(const RunConfig& c) {
  nlohmann::json j;
  j["z"] = c.params.z;
  j["kappa"] = c.params.kappa;
  j["alpha"] = c.params.alpha;
  j["gamma"] = c.gamma;
  j["n_points"] = c.n_points;
  j["r_max"] = c.r_max;
  j["max_iterations"] = c.max_iterations;
  j["window"] = c.window;
  j["delta_tol"] = c.delta_tol;
  j["plateau_tol"] = c.plateau_tol;
  j["output_prefix"] = c.output_prefix;
  j["random_seed"] = c.random_seed;
  j["start"] = c.start == StartVectorKind::bethe ? "bethe" : "random";
  if (c.start_exponent) {
    j["start_exponent"] = *c.start_exponent;
  } else {
    j["start_exponent"] = nullptr;
  }
  j["oracle_tol"] = c.oracle_tol;
  j["kernel"] =
      c.kernel ? std::string(kernels::backend_name(*c.kernel)) : "auto";
  return j;
}

nlohmann::json trace_json(const EigenTrace& t) {
  nlohmann::json j;
  j["id"] = t.id;
  j["birth_iteration"] = t.birth_iteration;
  j["classification"] = std::string(classification_name(t.classification));
  j["negative"] = t.currently_negative();
  j["values"] = t.values;
  j["deltas"] = t.deltas;
  nlohmann::json cls = nlohmann::json::array();
  for (auto c : t.classifications) cls.push_back(std::string(classification_name(c)));
  j["classifications"] = cls;
  return j;
}

}  // namespace

void emit_outputs(const RunReport& report, const std::string& prefix) {
  const std::string csv_path = prefix + "_eigenvalues.csv";
  {
    std::ofstream csv(csv_path);
    if (!csv.is_open()) throw IoError("cannot open for writing: " + csv_path);
    csv << "iteration,trace_id,ritz_value,delta,classification\n";
    for (int n = 1; n <= report.iterations_executed; ++n) {
      for (const auto& t : report.traces) {
        if (n < t.birth_iteration || n > t.last_iteration()) continue;
        const auto k = static_cast<std::size_t>(n - t.birth_iteration);
        csv << n << ',' << t.id << ',' << fmt17(t.values[k]) << ','
            << fmt17(t.deltas[k]) << ','
            << classification_name(t.classifications[k]) << '\n';
      }
    }
    csv.flush();
    if (!csv.good()) throw IoError("failed writing: " + csv_path);
  }

  const std::string json_path = prefix + "_report.json";
  nlohmann::json j;
  j["config"] = config_json(report.config);
  j["oracle_energy"] = report.oracle_energy;
  j["iterations_executed"] = report.iterations_executed;
  j["breakdown"] = report.breakdown;
  j["kernel_backend"] = report.kernel_backend;
  j["bound_trace_count"] = report.bound_trace_count;
  j["negative_trace_count"] = report.negative_trace_count;
  if (report.bound_value) {
    j["bound_value"] = *report.bound_value;
    j["bound_error"] = *report.bound_error;
  } else {
    j["bound_value"] = nullptr;
    j["bound_error"] = nullptr;
  }
  j["warnings"] = report.warnings;
  j["timings_ms"] = report.iteration_ms;
  nlohmann::json traces = nlohmann::json::array();
  for (const auto& t : report.traces) traces.push_back(trace_json(t));
  j["traces"] = traces;

  std::ofstream js(json_path);
  if (!js.is_open()) throw IoError("cannot open for writing: " + json_path);
  js << j.dump(2) << '\n';
  js.flush();
  if (!js.good()) throw IoError("failed writing: " + json_path);
}

void print_summary(const RunReport& report, std::ostream& os) {
  char line[256];
  double total_ms = 0.0;
  for (double t : report.iteration_ms) total_ms += t;
  os << "run summary\n";
  os << "  oracle energy      " << fmt17(report.oracle_energy) << '\n';
  os << "  iterations         " << report.iterations_executed
     << (report.breakdown ? " (breakdown)" : "") << '\n';
  os << "  kernel backend     " << report.kernel_backend << '\n';
  std::snprintf(line, sizeof(line), "  total time         %.1f ms", total_ms);
  os << line << '\n';
  os << "  traces             " << report.traces.size() << " total, "
     << report.bound_trace_count << " bound, " << report.negative_trace_count
     << " negative\n";
  if (report.bound_value) {
    os << "  bound value        " << fmt17(*report.bound_value) << '\n';
    std::snprintf(line, sizeof(line), "  bound error        %.3e",
                  *report.bound_error);
    os << line << '\n';
  }
  for (const auto& w : report.warnings) os << "  warning: " << w << '\n';
  os << '\n';
  std::snprintf(line, sizeof(line), "  %5s %6s %22s %14s %s", "trace", "birth",
                "final value", "final delta", "classification");
  os << line << '\n';
  for (const auto& t : report.traces) {
    std::snprintf(line, sizeof(line), "  %5d %6d %22.15g %14.3e %s", t.id,
                  t.birth_iteration, t.final_value(), t.deltas.back(),
                  std::string(classification_name(t.classification)).c_str());
    os << line << '\n';
  }
}

}  // namespace diraclanczos
