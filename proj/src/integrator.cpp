#include "ctls/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ctls {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b_hat
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

// PI controller (Hairer & Wanner, order 5).
constexpr double kBeta = 0.04;
constexpr double kAlpha = 0.2 - 0.75 * kBeta;
constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 10.0;

}  // namespace

void IntegratorConfig::validate() const {
  auto tol_ok = [](double x) { return x > 0.0 && x <= 1e-2; };
  if (!tol_ok(rel_tol)) throw std::invalid_argument("IntegratorConfig: rel_tol must lie in (0, 1e-2]");
  if (!tol_ok(abs_tol)) throw std::invalid_argument("IntegratorConfig: abs_tol must lie in (0, 1e-2]");
  if (!(max_step > 0.0)) throw std::invalid_argument("IntegratorConfig: max_step must be positive");
  if (!(initial_step > 0.0)) throw std::invalid_argument("IntegratorConfig: initial_step must be positive");
}

Vec3 bloch_rhs(const PauliVector& pv, const BlochVector& r) { return pv.h.cross(r.r); }

BlochIntegrator::BlochIntegrator(IntegratorConfig cfg, Precession sense)
    : cfg_(cfg), sense_(sense), step_(std::min(cfg.initial_step, cfg.max_step)) {
  cfg_.validate();
}

Vec3 BlochIntegrator::rhs(const FieldFn& h, double t, const Vec3& r) const {
  const Vec3 f = h(t).h.cross(r);
  return sense_ == Precession::Forward ? f : Vec3(-f);
}

BlochVector BlochIntegrator::advance(const FieldFn& h, const BlochVector& r0, double t0, double t1) {
  if (t1 < t0) throw std::invalid_argument("BlochIntegrator: t1 < t0");
  if (t1 == t0) return r0;

  const double norm0 = r0.norm();
  const double min_step = 1e-6 * cfg_.initial_step;
  Vec3 y = r0.r;
  double t = t0;
  Vec3 k1 = rhs(h, t, y);

  while (t < t1) {
    double step = std::min(step_, cfg_.max_step);
    const bool last = t + step >= t1;
    if (last) step = t1 - t;

    const Vec3 k2 = rhs(h, t + c2 * step, y + step * (a21 * k1));
    const Vec3 k3 = rhs(h, t + c3 * step, y + step * (a31 * k1 + a32 * k2));
    const Vec3 k4 = rhs(h, t + c4 * step, y + step * (a41 * k1 + a42 * k2 + a43 * k3));
    const Vec3 k5 = rhs(h, t + c5 * step, y + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const double t_next = last ? t1 : t + step;
    const Vec3 k6 = rhs(h, t_next, y + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Vec3 y_next = y + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vec3 k7 = rhs(h, t_next, y_next);
    const Vec3 err = step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const double scale = cfg_.abs_tol + cfg_.rel_tol * std::max(y.norm(), y_next.norm());
    const double err_norm = err.cwiseAbs().maxCoeff() / scale;

    if (err_norm <= 1.0) {
      ++stats_.accepted;
      t = t_next;
      y = y_next;
      const double n = y.norm();
      if (n > 0.0) y *= norm0 / n;
      k1 = rhs(h, t, y);

      double factor = err_norm > 0.0 ? kSafety * std::pow(err_norm, -kAlpha) * std::pow(prev_err_, kBeta)
                                     : kMaxFactor;
      factor = std::clamp(factor, kMinFactor, kMaxFactor);
      prev_err_ = std::max(err_norm, 1e-4);
      // A clipped landing step says nothing about the sustainable step size.
      if (!last || step >= step_) step_ = std::min(step * factor, cfg_.max_step);
    } else {
      ++stats_.rejected;
      const double factor = std::max(kMinFactor, kSafety * std::pow(err_norm, -kAlpha));
      step_ = step * factor;
      if (step_ < min_step) {
        std::ostringstream os;
        os << "BlochIntegrator: step size underflow (" << step_ << " < " << min_step << ") at t = " << t;
        throw IntegrationError(os.str());
      }
    }
  }
  return BlochVector(y);
}

BlochVector integrate(const FieldFn& h, const BlochVector& r0, double t0, double t1, const IntegratorConfig& cfg,
                      Precession sense) {
  BlochIntegrator stepper(cfg, sense);
  return stepper.advance(h, r0, t0, t1);
}

}  // namespace ctls
