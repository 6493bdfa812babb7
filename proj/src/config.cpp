#include "ctls/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ctls {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  if (trim(value).empty()) return out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError(key, "expected a number, got an empty value");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError(key, "expected a finite number, got '" + t + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || v < INT32_MIN || v > INT32_MAX) {
    throw ConfigError(key, "expected an integer, got '" + t + "'");
  }
  return static_cast<int>(v);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename T>
const T& require(const std::optional<T>& v, const char* key) {
  if (!v) throw ConfigError(key, "missing required value");
  return *v;
}

TlsParams make_tls(const RunConfig& cfg) {
  const double delta0 = require(cfg.delta0, "delta0");
  try {
    return TlsParams(kTwoPi * delta0, kTwoPi * cfg.epsilon0.value_or(0.0));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("delta0", e.what());
  }
}

void validate_integrator(const IntegratorConfig& ic) {
  try {
    ic.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("", e.what());
  }
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "delta0",   "epsilon0",     "omega0",        "alpha",  "eta",    "omega_final",     "n_periods",
      "rel_tol",  "abs_tol",      "max_step",      "initial_step",    "backends",        "initial_state",
      "output",   "alphas",       "window",        "scan_omega0_min", "scan_omega0_max", "scan_points"};
  return keys;
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("", "line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("", "line " + std::to_string(lineno) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "delta0") cfg.delta0 = parse_double(key, value);
  else if (key == "epsilon0") cfg.epsilon0 = parse_double(key, value);
  else if (key == "omega0") cfg.omega0 = parse_double(key, value);
  else if (key == "alpha") cfg.alpha = parse_double(key, value);
  else if (key == "eta") cfg.eta = parse_double(key, value);
  else if (key == "omega_final") cfg.omega_final = parse_double(key, value);
  else if (key == "n_periods") cfg.n_periods = parse_int(key, value);
  else if (key == "rel_tol") cfg.integrator.rel_tol = parse_double(key, value);
  else if (key == "abs_tol") cfg.integrator.abs_tol = parse_double(key, value);
  else if (key == "max_step") cfg.integrator.max_step = parse_double(key, value);
  else if (key == "initial_step") cfg.integrator.initial_step = parse_double(key, value);
  else if (key == "backends") {
    std::vector<Method> ms;
    for (const auto& name : split_list(value)) {
      const auto m = parse_method(name);
      if (!m) throw ConfigError(key, "unknown backend '" + name + "' (expected exact, rwa, magnus1, magnus2)");
      ms.push_back(*m);
    }
    if (ms.empty()) throw ConfigError(key, "at least one backend is required");
    cfg.backends = std::move(ms);
  } else if (key == "initial_state") {
    const auto parts = split_list(value);
    if (parts.size() != 3) throw ConfigError(key, "expected three comma-separated components");
    Vec3 r;
    for (int c = 0; c < 3; ++c) r[c] = parse_double(key, parts[static_cast<std::size_t>(c)]);
    if (r.norm() > 1.0 + 1e-9) throw ConfigError(key, "Bloch vector length exceeds 1");
    cfg.initial_state = r;
  } else if (key == "output") {
    cfg.output_path = trim(value);
  } else if (key == "alphas") {
    std::vector<double> as;
    for (const auto& a : split_list(value)) as.push_back(parse_double(key, a));
    cfg.alphas = std::move(as);
  } else if (key == "window") cfg.window = parse_double(key, value);
  else if (key == "scan_omega0_min") cfg.scan_omega0_min = parse_double(key, value);
  else if (key == "scan_omega0_max") cfg.scan_omega0_max = parse_double(key, value);
  else if (key == "scan_points") cfg.scan_points = parse_int(key, value);
  else throw ConfigError(key, "unknown configuration key");
}

void apply_settings(RunConfig& cfg, const std::map<std::string, std::string>& settings) {
  for (const auto& [k, v] : settings) apply_setting(cfg, k, v);
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  apply_settings(base, parse_config_text(ss.str()));
  return base;
}

RunConfig preset_config(const std::string& name) {
  ExperimentPreset p = [&] {
    if (name == "fig3") return fig3_preset();
    if (name == "shalibo") return shalibo_preset();
    throw ConfigError("preset", "unknown preset '" + name + "' (expected fig3 or shalibo)");
  }();
  RunConfig cfg;
  cfg.delta0 = p.tls.tunneling() / kTwoPi;
  cfg.epsilon0 = p.tls.bias() / kTwoPi;
  cfg.omega0 = p.drive.omega0 / kTwoPi;
  cfg.alpha = p.drive.alpha / kTwoPi;
  cfg.eta = p.drive.eta / kTwoPi;
  cfg.omega_final = p.omega_final / kTwoPi;
  cfg.integrator = p.integrator;
  cfg.backends = p.backends;
  cfg.initial_state = p.initial.r;
  return cfg;
}

std::string dump_config(const RunConfig& cfg) {
  std::ostringstream os;
  auto opt = [&](const char* key, const auto& v) {
    if (v) os << key << " = " << fmt(static_cast<double>(*v)) << '\n';
  };
  opt("delta0", cfg.delta0);
  opt("epsilon0", cfg.epsilon0);
  opt("omega0", cfg.omega0);
  opt("alpha", cfg.alpha);
  opt("eta", cfg.eta);
  opt("omega_final", cfg.omega_final);
  if (cfg.n_periods) os << "n_periods = " << *cfg.n_periods << '\n';
  os << "rel_tol = " << fmt(cfg.integrator.rel_tol) << '\n';
  os << "abs_tol = " << fmt(cfg.integrator.abs_tol) << '\n';
  os << "max_step = " << fmt(cfg.integrator.max_step) << '\n';
  os << "initial_step = " << fmt(cfg.integrator.initial_step) << '\n';
  os << "backends = ";
  for (std::size_t k = 0; k < cfg.backends.size(); ++k) os << (k ? "," : "") << method_name(cfg.backends[k]);
  os << '\n';
  os << "initial_state = " << fmt(cfg.initial_state.x()) << ',' << fmt(cfg.initial_state.y()) << ','
     << fmt(cfg.initial_state.z()) << '\n';
  os << "output = " << cfg.output_path << '\n';
  os << "alphas = ";
  for (std::size_t k = 0; k < cfg.alphas.size(); ++k) os << (k ? "," : "") << fmt(cfg.alphas[k]);
  os << '\n';
  os << "window = " << fmt(cfg.window) << '\n';
  opt("scan_omega0_min", cfg.scan_omega0_min);
  opt("scan_omega0_max", cfg.scan_omega0_max);
  os << "scan_points = " << cfg.scan_points << '\n';
  return os.str();
}

Simulation resolve_simulation(const RunConfig& cfg) {
  const TlsParams tls = make_tls(cfg);
  ChirpDrive d;
  d.omega0 = kTwoPi * require(cfg.omega0, "omega0");
  d.alpha = kTwoPi * require(cfg.alpha, "alpha");
  d.eta = kTwoPi * require(cfg.eta, "eta");
  if (!(d.omega0 > 0.0)) throw ConfigError("omega0", "must be positive");
  if (d.eta < 0.0) throw ConfigError("eta", "must be non-negative");

  if (cfg.n_periods) {
    if (*cfg.n_periods < 1) throw ConfigError("n_periods", "must be at least 1");
    d.n_periods = *cfg.n_periods;
  } else if (cfg.omega_final) {
    try {
      d.n_periods = periods_until(d, kTwoPi * *cfg.omega_final);
    } catch (const std::exception& e) {
      throw ConfigError("omega_final", e.what());
    }
  } else {
    throw ConfigError("n_periods", "missing required value (set n_periods or omega_final)");
  }
  validate_integrator(cfg.integrator);
  if (cfg.backends.empty()) throw ConfigError("backends", "at least one backend is required");
  return {tls, d, BlochVector(cfg.initial_state), cfg.backends, cfg.integrator};
}

LzSweepSetup resolve_lz_sweep(const RunConfig& cfg) {
  LzSweepSetup s{make_tls(cfg), 0.0, {}, cfg.window, cfg.integrator};
  s.eta = kTwoPi * require(cfg.eta, "eta");
  if (!(s.eta > 0.0)) throw ConfigError("eta", "must be positive for a Landau-Zener sweep");
  if (cfg.alphas.empty()) throw ConfigError("alphas", "empty chirp-rate list");
  for (double a : cfg.alphas) {
    if (!(a > 0.0)) throw ConfigError("alphas", "chirp rates must be positive");
    s.alphas.push_back(kTwoPi * a);
  }
  if (!(cfg.window >= kMinLzWindow)) {
    throw ConfigError("window", "must be at least " + fmt(kMinLzWindow) + " (units of u*eta)");
  }
  validate_integrator(cfg.integrator);
  return s;
}

ResonanceScanSetup resolve_bloch_siegert(const RunConfig& cfg) {
  ResonanceScanSetup s{make_tls(cfg), 0.0, {}, cfg.backends, cfg.integrator};
  if (!s.tls.symmetric()) throw ConfigError("epsilon0", "resonance scan requires a symmetric TLS (epsilon0 = 0)");
  s.eta = kTwoPi * require(cfg.eta, "eta");
  if (!(s.eta > 0.0)) throw ConfigError("eta", "must be positive");
  if (cfg.scan_points < 3) throw ConfigError("scan_points", "need at least 3 points");
  const double delta = *cfg.delta0;
  const double lo = cfg.scan_omega0_min.value_or(0.98 * delta);
  const double hi = cfg.scan_omega0_max.value_or(1.02 * delta);
  if (!(lo > 0.0) || !(hi > lo)) throw ConfigError("scan_omega0_min", "need 0 < scan_omega0_min < scan_omega0_max");
  const int n = cfg.scan_points;
  for (int k = 0; k < n; ++k) {
    s.omega0s.push_back(kTwoPi * (lo + (hi - lo) * k / (n - 1)));
  }
  validate_integrator(cfg.integrator);
  if (cfg.backends.empty()) throw ConfigError("backends", "at least one backend is required");
  return s;
}

}  // namespace ctls
