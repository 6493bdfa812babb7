#pragma once

// Observables, trace comparison and the preset experiments.

#include "ctls/chirp_protocol.hpp"
#include "ctls/integrator.hpp"
#include "ctls/propagators.hpp"

#include <map>
#include <string>
#include <vector>

namespace ctls {

/// P_x = (1 - r_x)/2, clamped to [0, 1].
double p_x(const BlochVector& r);

struct ComparisonReport {
  Method first = Method::Exact;
  Method second = Method::Exact;
  double max_abs_px_error = 0.0;
  double mean_abs_px_error = 0.0;
  std::vector<double> errors;  // |P_x^first(j) - P_x^second(j)| per grid point
};

/// Throws std::invalid_argument unless both traces sit on the same grid.
ComparisonReport compare(const StroboscopicTrace& a, const StroboscopicTrace& b);

struct ExperimentPreset {
  std::string name;
  TlsParams tls;
  ChirpDrive drive;
  double omega_final = 0.0;  // chirp end frequency; drive.n_periods reaches it
  BlochVector initial;
  std::vector<Method> backends;
  IntegratorConfig integrator;
  std::vector<std::string> assumptions;
};

/// Symmetric TLS at 2pi*6 GHz, eta = 2pi*27 MHz, alpha = 1.5 eta^2, chirp
/// 2pi*5.9 -> 2pi*6.1 GHz, r(0) = (0,0,1). Time in ns, frequencies in rad/ns.
ExperimentPreset fig3_preset();

/// Same TLS, downward chirp 2pi*6.1 -> 2pi*5.9 GHz at alpha = -2pi*1 MHz/ns,
/// r(0) = (-1,0,0).
ExperimentPreset shalibo_preset();

/// Bare drive period in units of 1/eta: (2 pi / omega0) * eta.
double bare_period_ratio(const ExperimentPreset& p);

struct LzPoint {
  double alpha = 0.0;
  double p_exact = 0.0;
  double p_formula = 0.0;
  double abs_err = 0.0;
  int n_periods = 0;
};

inline constexpr double kMinLzWindow = 20.0;

/// For each chirp rate, starts in the instantaneous RWA ground state with
/// detuning +window*u*eta and integrates the exact backend until the detuning
/// reaches -window*u*eta. p_exact is the final population of the
/// instantaneous RWA ground state. Throws std::invalid_argument for
/// non-positive rates or window < kMinLzWindow.
std::vector<LzPoint> lz_sweep(const TlsParams& s, double eta, const std::vector<double>& alphas,
                              const IntegratorConfig& cfg, double window = kMinLzWindow);

struct ResonanceScan {
  std::vector<double> omega0s;
  std::map<Method, std::vector<double>> transfer;  // long-time transfer amplitude per omega0
  std::map<Method, double> peak;                   // interpolated peak location
  double predicted_shift = 0.0;                    // 3 eta^2 / (4 Delta)
};

/// Long-time transfer amplitude out of r = (-1,0,0) for a harmonic drive:
/// 1 - n_x^2 with n the rotation axis of the method's one-period map.
double harmonic_transfer(Method m, const TlsParams& s, double eta, double omega0, const IntegratorConfig& cfg);

/// Vertex of the parabola through the grid maximum and its two neighbours.
/// Throws std::domain_error if the maximum sits on the edge of the grid.
double interpolate_peak(const std::vector<double>& x, const std::vector<double>& y);

/// Harmonic (alpha = 0) resonance scan for a symmetric TLS.
ResonanceScan bloch_siegert_scan(const TlsParams& s, double eta, const std::vector<double>& omega0s,
                                 const IntegratorConfig& cfg, const std::vector<Method>& methods = {
                                     Method::Exact, Method::RWA, Method::Magnus1, Method::Magnus2});

}  // namespace ctls
