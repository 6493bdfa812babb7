#include "ctls/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>

namespace ctls {

PauliVector lab_h(const TlsParams& s, const ChirpDrive& d, double t) {
  const double sp = std::sin(drive_phase(d, t));
  return {s.tunneling(), 0.0, s.bias() + 2.0 * d.eta * sp};
}

PauliVector eigenframe_h(const TlsParams& s, const ChirpDrive& d, double t) {
  const double sp = std::sin(drive_phase(d, t));
  return {s.splitting() + 2.0 * s.v() * d.eta * sp, 0.0, 2.0 * s.u() * d.eta * sp};
}

PauliVector rotating_h(const TlsParams& s, const ChirpDrive& d, double t) {
  const double phi = drive_phase(d, t);
  const double ue = s.u() * d.eta;
  return {detuning_at(s, d, t) + 2.0 * s.v() * d.eta * std::sin(phi),
          -ue + ue * std::cos(2.0 * phi),
          ue * std::sin(2.0 * phi)};
}

PauliVector rwa_h(const TlsParams& s, const ChirpDrive& d, double t) {
  return {detuning_at(s, d, t), -s.u() * d.eta, 0.0};
}

double mean_detuning(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, int j) {
  return shorthand_delta(s, d, g, j - 1) - d.alpha * g.tau(j);
}

Vec3 chirp_terms(const TlsParams& s, double eta, double alpha, double omega_prev) {
  const double w2 = omega_prev * omega_prev;
  return {4.0 * alpha * s.v() * eta / w2, 0.0, alpha * s.u() * eta / w2};
}

SecondOrderTerms second_order_terms(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, int j) {
  const double w = shorthand_omega(d, g, j - 1);
  const double ue = s.u() * d.eta;
  const double dm = mean_detuning(s, d, g, j);

  SecondOrderTerms out;
  // Bloch-Siegert-type shift, detuning-dependent tilt and bias-induced z term.
  out.harmonic = Vec3(-3.0 * ue * ue / (4.0 * w), -ue * dm / (2.0 * w), 2.0 * d.eta * d.eta * s.u() * s.v() / w);
  out.chirp = chirp_terms(s, d.eta, d.alpha, w);
  return out;
}

RotationMatrix EffectiveHamiltonian::period_map() const { return rotation_matrix({axis, energy * tau}); }

EffectiveHamiltonian h_eff(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, int j,
                           MagnusOrder order) {
  if (j < 1 || j > g.n_periods()) throw std::out_of_range("h_eff: period index out of range");

  EffectiveHamiltonian eff;
  eff.j = j;
  eff.tau = g.tau(j);
  eff.pv = PauliVector(mean_detuning(s, d, g, j), -s.u() * d.eta, 0.0);
  if (order == MagnusOrder::FirstPlusSecond) eff.pv.h += second_order_terms(s, d, g, j).total();

  const Decomposition dec = decompose(eff.pv);
  eff.energy = dec.energy;
  eff.axis = dec.axis;
  return eff;
}

}  // namespace ctls
