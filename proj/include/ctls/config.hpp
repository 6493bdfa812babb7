#pragma once

// Run configuration for the command-line front end.
//
// The on-disk format is flat "key = value" text with '#' comments. Values at
// this boundary use ordinary frequencies: GHz for frequencies, GHz/ns for
// chirp rates and ns for times. resolve_*() converts to the angular units
// used everywhere else.

#include "ctls/analysis.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctls {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct RunConfig {
  std::optional<double> delta0;       // GHz
  std::optional<double> epsilon0;     // GHz
  std::optional<double> omega0;       // GHz
  std::optional<double> alpha;        // GHz/ns
  std::optional<double> eta;          // GHz
  std::optional<double> omega_final;  // GHz, alternative to n_periods
  std::optional<int> n_periods;
  IntegratorConfig integrator;        // steps in ns
  std::vector<Method> backends{std::begin(kAllMethods), std::end(kAllMethods)};
  Vec3 initial_state{0.0, 0.0, 1.0};
  std::string output_path;

  std::vector<double> alphas;  // lz-sweep, GHz/ns
  double window = kMinLzWindow;

  std::optional<double> scan_omega0_min;  // bloch-siegert, GHz
  std::optional<double> scan_omega0_max;
  int scan_points = 81;

  bool operator==(const RunConfig&) const = default;
};

/// Every key accepted in a config file and as a --key override.
const std::vector<std::string>& config_keys();

/// Parses "key = value" lines. Throws ConfigError on malformed lines.
std::map<std::string, std::string> parse_config_text(const std::string& text);

/// Sets one field from its text form. Throws ConfigError naming the field.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

void apply_settings(RunConfig& cfg, const std::map<std::string, std::string>& settings);

RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Known names: "fig3", "shalibo". Throws ConfigError otherwise.
RunConfig preset_config(const std::string& name);

/// Key = value text that parses back to an identical RunConfig.
std::string dump_config(const RunConfig& cfg);

struct Simulation {
  TlsParams tls;
  ChirpDrive drive;
  BlochVector initial;
  std::vector<Method> backends;
  IntegratorConfig integrator;
};

Simulation resolve_simulation(const RunConfig& cfg);

struct LzSweepSetup {
  TlsParams tls;
  double eta = 0.0;
  std::vector<double> alphas;  // rad/ns^2
  double window = kMinLzWindow;
  IntegratorConfig integrator;
};

LzSweepSetup resolve_lz_sweep(const RunConfig& cfg);

struct ResonanceScanSetup {
  TlsParams tls;
  double eta = 0.0;
  std::vector<double> omega0s;  // rad/ns
  std::vector<Method> backends;
  IntegratorConfig integrator;
};

ResonanceScanSetup resolve_bloch_siegert(const RunConfig& cfg);

}  // namespace ctls
