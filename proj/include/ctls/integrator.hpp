#pragma once

// Adaptive Dormand-Prince 5(4) integration of the Bloch equation
// dr/dt = h(t) x r.

#include "ctls/su2.hpp"

#include <functional>
#include <stdexcept>

namespace ctls {

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 1.0;
  double initial_step = 1e-3;

  /// Tolerances in (0, 1e-2], steps positive. Throws std::invalid_argument.
  void validate() const;

  bool operator==(const IntegratorConfig&) const = default;
};

/// Forward: dr/dt = h x r, the sense in which a constant h rotates r by the
/// right-handed angle |h| t. Reverse: dr/dt = r x h.
enum class Precession { Forward, Reverse };

class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using FieldFn = std::function<PauliVector(double)>;

Vec3 bloch_rhs(const PauliVector& pv, const BlochVector& r);

struct IntegratorStats {
  long accepted = 0;
  long rejected = 0;
};

/// Stateful stepper that keeps its step-size estimate between consecutive
/// intervals, so a trace can be integrated period by period without
/// restarting the controller. Every call lands exactly on its end time.
/// After each accepted step the Bloch vector is rescaled to its initial norm.
class BlochIntegrator {
 public:
  explicit BlochIntegrator(IntegratorConfig cfg, Precession sense = Precession::Forward);

  /// Throws IntegrationError if the step size underflows 1e-6 * initial_step.
  BlochVector advance(const FieldFn& h, const BlochVector& r0, double t0, double t1);

  const IntegratorStats& stats() const { return stats_; }

 private:
  Vec3 rhs(const FieldFn& h, double t, const Vec3& r) const;

  IntegratorConfig cfg_;
  Precession sense_;
  double step_;
  double prev_err_ = 1e-4;
  IntegratorStats stats_;
};

BlochVector integrate(const FieldFn& h, const BlochVector& r0, double t0, double t1, const IntegratorConfig& cfg,
                      Precession sense = Precession::Forward);

}  // namespace ctls
