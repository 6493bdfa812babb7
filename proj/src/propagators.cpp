#include "ctls/propagators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ctls {

namespace {

StroboscopicTrace integrate_trace(Method m, const FieldFn& h, const PeriodGrid& g, const BlochVector& r0,
                                  const IntegratorConfig& cfg) {
  StroboscopicTrace trace;
  trace.method = m;
  trace.records.reserve(g.size());
  trace.records.push_back({0, g.t(0), r0});

  BlochIntegrator stepper(cfg);
  BlochVector r = r0;
  for (int j = 1; j <= g.n_periods(); ++j) {
    r = stepper.advance(h, r, g.t(j - 1), g.t(j));
    trace.records.push_back({j, g.t(j), r});
  }
  return trace;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::RWA: return "rwa";
    case Method::Magnus1: return "magnus1";
    case Method::Magnus2: return "magnus2";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

double StroboscopicTrace::norm_drift() const {
  if (records.empty()) return 0.0;
  const double n0 = records.front().r.norm();
  double drift = 0.0;
  for (const auto& rec : records) drift = std::max(drift, std::abs(rec.r.norm() - n0));
  return drift;
}

StroboscopicTrace run_exact(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, const BlochVector& r0,
                            const IntegratorConfig& cfg) {
  return integrate_trace(Method::Exact, [&](double t) { return rotating_h(s, d, t); }, g, r0, cfg);
}

StroboscopicTrace run_rwa(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, const BlochVector& r0,
                          const IntegratorConfig& cfg) {
  return integrate_trace(Method::RWA, [&](double t) { return rwa_h(s, d, t); }, g, r0, cfg);
}

std::vector<RotationMatrix> magnus_maps(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g,
                                        MagnusOrder order) {
  std::vector<RotationMatrix> maps;
  maps.reserve(static_cast<std::size_t>(g.n_periods()));
  for (int j = 1; j <= g.n_periods(); ++j) maps.push_back(h_eff(s, d, g, j, order).period_map());
  return maps;
}

StroboscopicTrace run_magnus(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, const BlochVector& r0,
                             MagnusOrder order) {
  StroboscopicTrace trace;
  trace.method = order == MagnusOrder::First ? Method::Magnus1 : Method::Magnus2;
  trace.records.reserve(g.size());
  trace.records.push_back({0, g.t(0), r0});

  BlochVector r = r0;
  const auto maps = magnus_maps(s, d, g, order);
  for (int j = 1; j <= g.n_periods(); ++j) {
    r = apply(maps[static_cast<std::size_t>(j - 1)], r);
    trace.records.push_back({j, g.t(j), r});
  }
  return trace;
}

StroboscopicTrace run(Method m, const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, const BlochVector& r0,
                      const IntegratorConfig& cfg) {
  switch (m) {
    case Method::Exact: return run_exact(s, d, g, r0, cfg);
    case Method::RWA: return run_rwa(s, d, g, r0, cfg);
    case Method::Magnus1: return run_magnus(s, d, g, r0, MagnusOrder::First);
    case Method::Magnus2: return run_magnus(s, d, g, r0, MagnusOrder::FirstPlusSecond);
  }
  throw std::invalid_argument("run: unknown method");
}

double lz_probability(const TlsParams& s, double eta, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("lz_probability: chirp rate must be positive");
  const double ue = s.u() * eta;
  return -std::expm1(-M_PI * ue * ue / (4.0 * alpha));
}

}  // namespace ctls
