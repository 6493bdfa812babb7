#pragma once

// Hamiltonian builders for the chirped two-level system. Every builder
// returns Pauli coefficients of sigma/2, so a term c*sigma_z/2 is stored as
// h_z = c and a term c*sigma_z as h_z = 2c.

#include "ctls/chirp_protocol.hpp"
#include "ctls/su2.hpp"

namespace ctls {

enum class MagnusOrder { First, FirstPlusSecond };

/// H = (Delta_0 sx + epsilon_0 sz)/2 + eta sz sin(phi(t)).
PauliVector lab_h(const TlsParams& s, const ChirpDrive& d, double t);

/// Lab Hamiltonian expressed in the eigenbasis of its static part.
PauliVector eigenframe_h(const TlsParams& s, const ChirpDrive& d, double t);

/// Frame co-rotating with the drive phase about x. The components are
///   h_x = delta(t) + 2 v eta sin(phi)
///   h_y = -u eta + u eta cos(2 phi)
///   h_z = u eta sin(2 phi).
PauliVector rotating_h(const TlsParams& s, const ChirpDrive& d, double t);

/// Rotating-frame Hamiltonian with the oscillating terms dropped.
PauliVector rwa_h(const TlsParams& s, const ChirpDrive& d, double t);

/// Second-order correction split into the part shared with harmonic driving
/// and the part that only exists for a chirp (proportional to alpha).
struct SecondOrderTerms {
  Vec3 harmonic = Vec3::Zero();
  Vec3 chirp = Vec3::Zero();

  Vec3 total() const { return harmonic + chirp; }
};

/// Period-averaged detuning delta_{j-1} - alpha tau_j.
double mean_detuning(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, int j);

/// Chirp-specific second-order terms for a given shorthand frequency omega_{j-1}:
/// (4 alpha v eta / w^2, 0, alpha u eta / w^2). Linear in alpha.
Vec3 chirp_terms(const TlsParams& s, double eta, double alpha, double omega_prev);

SecondOrderTerms second_order_terms(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, int j);

struct EffectiveHamiltonian {
  int j = 0;
  PauliVector pv;
  double tau = 0.0;
  double energy = 0.0;
  Vec3 axis = Vec3::UnitX();

  /// Bloch map of one period, rotation about axis by energy*tau.
  RotationMatrix period_map() const;
};

/// Constant Hamiltonian generating the evolution from t_{j-1} to t_j,
/// 1 <= j <= N. Throws std::out_of_range otherwise.
EffectiveHamiltonian h_eff(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, int j,
                           MagnusOrder order);

}  // namespace ctls
