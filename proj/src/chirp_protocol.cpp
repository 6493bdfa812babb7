#include "ctls/chirp_protocol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ctls {

namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

bool finite(double x) { return std::isfinite(x); }

long double reduce(long double x) {
  long double r = std::fmod(x, kTwoPiL);
  if (r < 0.0L) r += kTwoPiL;
  return r;
}

}  // namespace

TlsParams::TlsParams(double tunneling, double bias)
    : tunneling_(tunneling), bias_(bias), splitting_(std::hypot(tunneling, bias)) {
  if (!finite(tunneling) || !finite(bias)) throw std::invalid_argument("TlsParams: non-finite parameter");
  if (!(splitting_ > 0.0)) throw std::invalid_argument("TlsParams: level splitting must be positive");
}

void ChirpDrive::validate() const {
  if (!finite(omega0) || !finite(alpha) || !finite(eta)) {
    throw std::invalid_argument("ChirpDrive: non-finite parameter");
  }
  if (!(omega0 > 0.0)) throw std::invalid_argument("ChirpDrive: omega0 must be positive");
  if (eta < 0.0) throw std::invalid_argument("ChirpDrive: eta must be non-negative");
  if (n_periods < 1) throw std::invalid_argument("ChirpDrive: n_periods must be at least 1");
}

double omega_at(const ChirpDrive& d, double t) { return d.omega0 + d.alpha * t; }

double detuning_at(const TlsParams& s, const ChirpDrive& d, double t) {
  return s.splitting() - d.omega0 - 2.0 * d.alpha * t;
}

double drive_phase(const ChirpDrive& d, double t) {
  const long double tl = t;
  const long double linear = reduce(static_cast<long double>(d.omega0) * tl);
  const long double quadratic = reduce(static_cast<long double>(d.alpha) * tl * tl);
  return static_cast<double>(reduce(linear + quadratic));
}

double period_point(const ChirpDrive& d, long j) {
  if (j < 0) throw std::invalid_argument("period_point: negative index");
  if (j == 0) return 0.0;
  const double jd = static_cast<double>(j);
  if (d.alpha == 0.0) return kTwoPi * jd / d.omega0;

  // Root of alpha t^2 + omega0 t - 2 pi j = 0 in rationalized form.
  const double disc = d.omega0 * d.omega0 + 4.0 * kTwoPi * d.alpha * jd;
  if (disc < 0.0) {
    std::ostringstream os;
    os << "period_point: drive phase never reaches 2*pi*" << j << " (discriminant " << disc
       << " < 0; chirp turns around at t = " << -d.omega0 / (2.0 * d.alpha) << ")";
    throw std::domain_error(os.str());
  }
  const double denom = d.omega0 + std::sqrt(disc);
  if (!(denom > 0.0)) throw std::domain_error("period_point: no non-negative root");
  return 2.0 * kTwoPi * jd / denom;
}

int periods_until(const ChirpDrive& d, double omega_final) {
  if (d.alpha == 0.0) throw std::invalid_argument("periods_until: chirp rate is zero");
  const bool upward = d.alpha > 0.0;
  if (upward ? omega_final <= d.omega0 : omega_final >= d.omega0) {
    throw std::invalid_argument("periods_until: final frequency lies behind the chirp direction");
  }
  // omega(t) t = 2 pi j at omega(t) = omega_final gives the fractional count.
  const double t_end = (omega_final - d.omega0) / d.alpha;
  long n = std::max(1L, static_cast<long>(std::floor(omega_final * t_end / kTwoPi)));
  auto reached = [&](long k) {
    const double w = omega_at(d, period_point(d, k));
    return upward ? w >= omega_final : w <= omega_final;
  };
  while (n > 1 && reached(n - 1)) --n;
  while (!reached(n)) ++n;
  return static_cast<int>(n);
}

PeriodGrid::PeriodGrid(std::vector<double> times) : t_(std::move(times)) {
  if (t_.size() < 2) throw std::invalid_argument("PeriodGrid: need at least one period");
  if (t_.front() != 0.0) throw std::invalid_argument("PeriodGrid: grid must start at t = 0");
  for (std::size_t k = 1; k < t_.size(); ++k) {
    if (!(t_[k] > t_[k - 1])) throw std::invalid_argument("PeriodGrid: times must increase strictly");
  }
}

double PeriodGrid::t(int j) const {
  if (j < 0 || j > n_periods()) throw std::out_of_range("PeriodGrid: index out of range");
  return t_[static_cast<std::size_t>(j)];
}

double PeriodGrid::tau(int j) const {
  if (j < 1 || j > n_periods()) throw std::out_of_range("PeriodGrid: period index out of range");
  return t_[static_cast<std::size_t>(j)] - t_[static_cast<std::size_t>(j - 1)];
}

double PeriodGrid::mean_omega(int j) const { return kTwoPi / tau(j); }

PeriodGrid build_grid(const ChirpDrive& d) {
  d.validate();
  std::vector<double> t(static_cast<std::size_t>(d.n_periods) + 1);
  for (int j = 0; j <= d.n_periods; ++j) {
    const double tj = period_point(d, j);
    if (!(omega_at(d, tj) > 0.0) || !(d.omega0 + 2.0 * d.alpha * tj > 0.0)) {
      std::ostringstream os;
      os << "build_grid: drive frequency is no longer positive at period " << j << " (t = " << tj << ")";
      throw std::domain_error(os.str());
    }
    t[static_cast<std::size_t>(j)] = tj;
  }
  return PeriodGrid(std::move(t));
}

double shorthand_omega(const ChirpDrive& d, const PeriodGrid& g, int j) {
  return d.omega0 + 2.0 * d.alpha * g.t(j);
}

double shorthand_delta(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, int j) {
  return s.splitting() - d.omega0 - 2.0 * d.alpha * g.t(j);
}

std::vector<std::string> ValidityReport::warnings() const {
  std::vector<std::string> out;
  if (drive_ratio >= threshold) {
    std::ostringstream os;
    os << "driving strength is not small against the drive frequency (eta/omega = " << drive_ratio << ")";
    out.push_back(os.str());
  }
  if (chirp_ratio >= threshold) {
    std::ostringstream os;
    os << "chirp is not weak (2*pi*|alpha|/omega0^2 = " << chirp_ratio << ")";
    out.push_back(os.str());
  }
  return out;
}

ValidityReport validity(const ChirpDrive& d, const PeriodGrid& g) {
  ValidityReport r;
  const double w_end = omega_at(d, g.times().back());
  r.drive_ratio = d.eta / std::min(d.omega0, w_end);
  r.chirp_ratio = kTwoPi * std::abs(d.alpha) / (d.omega0 * d.omega0);
  return r;
}

}  // namespace ctls
