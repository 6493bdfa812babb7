#include "ctls/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace ctls {

double p_x(const BlochVector& r) { return std::clamp(0.5 * (1.0 - r.x()), 0.0, 1.0); }

ComparisonReport compare(const StroboscopicTrace& a, const StroboscopicTrace& b) {
  if (a.records.size() != b.records.size()) throw std::invalid_argument("compare: traces have different lengths");
  ComparisonReport rep;
  rep.first = a.method;
  rep.second = b.method;
  rep.errors.reserve(a.records.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    const auto& ra = a.records[k];
    const auto& rb = b.records[k];
    if (ra.j != rb.j || ra.t != rb.t) throw std::invalid_argument("compare: traces sit on different grids");
    const double e = std::abs(p_x(ra.r) - p_x(rb.r));
    rep.errors.push_back(e);
    rep.max_abs_px_error = std::max(rep.max_abs_px_error, e);
    sum += e;
  }
  if (!rep.errors.empty()) rep.mean_abs_px_error = sum / static_cast<double>(rep.errors.size());
  return rep;
}

namespace {

constexpr double kGHz = kTwoPi;  // 1 GHz in rad/ns

ExperimentPreset base_preset(std::string name) {
  const double splitting = 6.0 * kGHz;
  ExperimentPreset p{std::move(name), TlsParams(splitting, 0.0), {}, 0.0, {}, {}, {}, {}};
  p.drive.eta = 0.027 * kGHz;
  p.backends.assign(std::begin(kAllMethods), std::end(kAllMethods));
  p.assumptions = {"level splitting taken as 2pi*6.0 GHz (resonance at about 6 GHz)",
                   "symmetric two-level system: epsilon0 = 0, u = 1, v = 0"};
  return p;
}

}  // namespace

ExperimentPreset fig3_preset() {
  ExperimentPreset p = base_preset("fig3");
  p.drive.omega0 = 5.9 * kGHz;
  p.drive.alpha = 1.5 * p.drive.eta * p.drive.eta;
  p.omega_final = 6.1 * kGHz;
  p.drive.n_periods = periods_until(p.drive, p.omega_final);
  p.initial = BlochVector(0.0, 0.0, 1.0);
  return p;
}

ExperimentPreset shalibo_preset() {
  ExperimentPreset p = base_preset("shalibo");
  p.drive.omega0 = 6.1 * kGHz;
  p.drive.alpha = -0.001 * kGHz;  // -2pi * 1 MHz/ns
  p.omega_final = 5.9 * kGHz;
  p.drive.n_periods = periods_until(p.drive, p.omega_final);
  p.initial = BlochVector(-1.0, 0.0, 0.0);
  return p;
}

double bare_period_ratio(const ExperimentPreset& p) { return kTwoPi / p.drive.omega0 * p.drive.eta; }

std::vector<LzPoint> lz_sweep(const TlsParams& s, double eta, const std::vector<double>& alphas,
                              const IntegratorConfig& cfg, double window) {
  if (!(window >= kMinLzWindow)) {
    std::ostringstream os;
    os << "lz_sweep: chirp window of " << window << " u*eta is too narrow; need |detuning| >= " << kMinLzWindow
       << " u*eta at both ends";
    throw std::invalid_argument(os.str());
  }
  if (!(eta > 0.0)) throw std::invalid_argument("lz_sweep: eta must be positive");
  if (alphas.empty()) throw std::invalid_argument("lz_sweep: empty chirp-rate list");

  const double gap = s.u() * eta;
  std::vector<LzPoint> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    if (!(alpha > 0.0)) throw std::invalid_argument("lz_sweep: chirp rates must be positive");

    ChirpDrive d;
    d.eta = eta;
    d.alpha = alpha;
    d.omega0 = s.splitting() - window * gap;
    const double t_end = window * gap / alpha;  // detuning reaches -window*gap
    const double phase_end = d.omega0 * t_end + alpha * t_end * t_end;
    d.n_periods = static_cast<int>(std::ceil(phase_end / kTwoPi));
    const PeriodGrid g = build_grid(d);

    const Vec3 ground0 = -decompose(rwa_h(s, d, 0.0)).axis;
    const StroboscopicTrace trace = run_exact(s, d, g, BlochVector(ground0), cfg);
    const Vec3 ground_end = -decompose(rwa_h(s, d, g.times().back())).axis;

    LzPoint pt;
    pt.alpha = alpha;
    pt.n_periods = d.n_periods;
    pt.p_exact = 0.5 * (1.0 + trace.records.back().r.r.dot(ground_end));
    pt.p_formula = lz_probability(s, eta, alpha);
    pt.abs_err = std::abs(pt.p_exact - pt.p_formula);
    out.push_back(pt);
  }
  return out;
}

double harmonic_transfer(Method m, const TlsParams& s, double eta, double omega0, const IntegratorConfig& cfg) {
  ChirpDrive d;
  d.omega0 = omega0;
  d.alpha = 0.0;
  d.eta = eta;
  d.n_periods = 1;
  const PeriodGrid g = build_grid(d);

  RotationMatrix map;
  switch (m) {
    case Method::Magnus1:
      map = h_eff(s, d, g, 1, MagnusOrder::First).period_map();
      break;
    case Method::Magnus2:
      map = h_eff(s, d, g, 1, MagnusOrder::FirstPlusSecond).period_map();
      break;
    case Method::Exact:
    case Method::RWA:
      for (int c = 0; c < 3; ++c) {
        BlochVector e;
        e.r[c] = 1.0;
        map.m.col(c) = run(m, s, d, g, e, cfg).records.back().r.r;
      }
      break;
  }
  const Vec3 rv = rotation_vector(map);
  const double angle = rv.norm();
  const double nx = angle > 0.0 ? rv.x() / angle : 1.0;
  return 1.0 - nx * nx;
}

double interpolate_peak(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3) throw std::invalid_argument("interpolate_peak: need >= 3 matching points");
  const auto k = static_cast<std::size_t>(std::distance(y.begin(), std::max_element(y.begin(), y.end())));
  if (k == 0 || k + 1 == y.size()) throw std::domain_error("interpolate_peak: maximum lies on the edge of the scan");

  const double x0 = x[k - 1], x1 = x[k], x2 = x[k + 1];
  const double y0 = y[k - 1], y1 = y[k], y2 = y[k + 1];
  const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
  const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
  if (den == 0.0) return x1;
  return x1 - 0.5 * num / den;
}

ResonanceScan bloch_siegert_scan(const TlsParams& s, double eta, const std::vector<double>& omega0s,
                                 const IntegratorConfig& cfg, const std::vector<Method>& methods) {
  if (!s.symmetric()) throw std::invalid_argument("bloch_siegert_scan: requires a symmetric TLS (epsilon0 = 0)");
  if (omega0s.size() < 3) throw std::invalid_argument("bloch_siegert_scan: need at least three drive frequencies");
  if (!std::is_sorted(omega0s.begin(), omega0s.end())) {
    throw std::invalid_argument("bloch_siegert_scan: drive frequencies must be sorted");
  }

  ResonanceScan scan;
  scan.omega0s = omega0s;
  scan.predicted_shift = 3.0 * eta * eta / (4.0 * s.splitting());
  for (Method m : methods) {
    auto& y = scan.transfer[m];
    y.reserve(omega0s.size());
    for (double w : omega0s) y.push_back(harmonic_transfer(m, s, eta, w, cfg));
    scan.peak[m] = interpolate_peak(omega0s, y);
  }
  return scan;
}

}  // namespace ctls
