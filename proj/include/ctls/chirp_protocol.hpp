#pragma once

// Linear frequency chirp and its stroboscopic period grid.
//
// All quantities are angular: frequencies in rad per time unit, chirp rates
// in rad per time unit squared. The driving phase is phi(t) = omega(t) * t
// with omega(t) = omega0 + alpha*t, so the instantaneous phase derivative is
// omega0 + 2*alpha*t and the detuning is Delta - omega0 - 2*alpha*t.

#include <cstddef>
#include <string>
#include <vector>

namespace ctls {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Static two-level system: H0 = (delta0 sx + epsilon0 sz)/2.
class TlsParams {
 public:
  TlsParams(double tunneling, double bias);

  double tunneling() const { return tunneling_; }  // Delta_0
  double bias() const { return bias_; }             // epsilon_0
  double splitting() const { return splitting_; }   // Delta = sqrt(Delta_0^2 + epsilon_0^2)
  double u() const { return tunneling_ / splitting_; }
  double v() const { return bias_ / splitting_; }
  bool symmetric() const { return bias_ == 0.0; }

 private:
  double tunneling_;
  double bias_;
  double splitting_;
};

struct ChirpDrive {
  double omega0 = 0.0;  // drive frequency at t = 0
  double alpha = 0.0;   // chirp rate, omega(t) = omega0 + alpha t
  double eta = 0.0;     // driving strength
  int n_periods = 1;    // grid length N; the grid starts at t = 0

  /// Throws std::invalid_argument on non-finite values, omega0 <= 0,
  /// eta < 0 or n_periods < 1.
  void validate() const;
};

double omega_at(const ChirpDrive& d, double t);

/// Delta - omega0 - 2 alpha t.
double detuning_at(const TlsParams& s, const ChirpDrive& d, double t);

/// phi(t) = omega0 t + alpha t^2 reduced to [0, 2pi). The two terms are
/// reduced separately in extended precision before they are summed.
double drive_phase(const ChirpDrive& d, double t);

/// Time t_j >= 0 with omega(t_j) t_j = 2 pi j. Throws std::domain_error if the
/// phase never reaches 2 pi j (negative chirp past its turnaround).
double period_point(const ChirpDrive& d, long j);

/// Smallest N with omega(t_N) >= omega_final (upward chirp) or
/// omega(t_N) <= omega_final (downward chirp).
int periods_until(const ChirpDrive& d, double omega_final);

class PeriodGrid {
 public:
  explicit PeriodGrid(std::vector<double> times);

  std::size_t size() const { return t_.size(); }
  int n_periods() const { return static_cast<int>(t_.size()) - 1; }
  double t(int j) const;
  double tau(int j) const;         // t_j - t_{j-1}, 1 <= j <= N
  double mean_omega(int j) const;  // 2 pi / tau_j
  const std::vector<double>& times() const { return t_; }

 private:
  std::vector<double> t_;
};

/// Grid t_0 = 0 < t_1 < ... < t_N. Throws if the chirp turns around or the
/// drive frequency stops being positive anywhere on the grid.
PeriodGrid build_grid(const ChirpDrive& d);

/// omega_0 + 2 alpha t_j (instantaneous phase derivative at t_j).
double shorthand_omega(const ChirpDrive& d, const PeriodGrid& g, int j);
/// Delta - omega_0 - 2 alpha t_j.
double shorthand_delta(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, int j);

/// Small-parameter ratios controlling the expansion; informative only.
struct ValidityReport {
  double drive_ratio = 0.0;  // eta / min(omega) over the grid
  double chirp_ratio = 0.0;  // 2 pi |alpha| / omega0^2
  double threshold = 0.1;

  bool ok() const { return drive_ratio < threshold && chirp_ratio < threshold; }
  std::vector<std::string> warnings() const;
};

ValidityReport validity(const ChirpDrive& d, const PeriodGrid& g);

}  // namespace ctls
