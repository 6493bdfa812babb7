#include "ctls/hamiltonians.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace ctls;

namespace {

ChirpDrive drive(double omega0, double alpha, double eta, int n = 20) {
  ChirpDrive d;
  d.omega0 = omega0;
  d.alpha = alpha;
  d.eta = eta;
  d.n_periods = n;
  return d;
}

// Eigenvalues of h0*1 + (h . sigma)/2 from an explicit 2x2 matrix.
Eigen::Vector2d spectrum(const PauliVector& pv) {
  const std::complex<double> i(0.0, 1.0);
  Mat2c m;
  m << pv.h0 + 0.5 * pv.h.z(), 0.5 * (pv.h.x() - i * pv.h.y()), 0.5 * (pv.h.x() + i * pv.h.y()),
      pv.h0 - 0.5 * pv.h.z();
  return Eigen::SelfAdjointEigenSolver<Mat2c>(m).eigenvalues();
}

}  // namespace

TEST(LabH, StaticPart) {
  const TlsParams s(0.8, 0.6);
  EXPECT_EQ(lab_h(s, drive(3.0, 0.1, 0.0), 2.7).h, Vec3(0.8, 0.0, 0.6));
  EXPECT_EQ(lab_h(s, drive(3.0, 0.1, 0.2), 0.0).h, Vec3(0.8, 0.0, 0.6));
  const Eigen::Vector2d ev = spectrum(lab_h(s, drive(3.0, 0.1, 0.0), 1.0));
  EXPECT_NEAR(ev(0), -0.5 * s.splitting(), 1e-15);
  EXPECT_NEAR(ev(1), 0.5 * s.splitting(), 1e-15);
}

TEST(EigenframeH, Examples) {
  const ChirpDrive d = drive(3.0, 0.1, 0.2);
  const TlsParams sym(1.7, 0.0);
  const double t = 0.91;
  const double sp = std::sin(3.0 * t + 0.1 * t * t);
  const PauliVector h = eigenframe_h(sym, d, t);
  EXPECT_DOUBLE_EQ(h.h.x(), 1.7);
  EXPECT_EQ(h.h.y(), 0.0);
  EXPECT_NEAR(h.h.z(), 2.0 * 0.2 * sp, 1e-15);
  EXPECT_EQ(eigenframe_h(TlsParams(0.8, 0.6), drive(3.0, 0.1, 0.0), t).h, Vec3(1.0, 0.0, 0.0));
}

TEST(EigenframeH, SpectrumMatchesLabFrame) {
  const TlsParams s(0.8, 0.6);
  const ChirpDrive d = drive(1.1, 0.03, 0.25);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> t(0.0, 50.0);
  for (int k = 0; k < 200; ++k) {
    const double tk = t(rng);
    const Eigen::Vector2d a = spectrum(lab_h(s, d, tk));
    const Eigen::Vector2d b = spectrum(eigenframe_h(s, d, tk));
    EXPECT_NEAR(a(0), b(0), 1e-12);
    EXPECT_NEAR(a(1), b(1), 1e-12);
  }
}

TEST(RotatingH, TermByTerm) {
  // sx, sy, sz coefficients written out term by term from the rotating-frame display.
  const TlsParams s(0.8, 0.6);
  const ChirpDrive d = drive(4.0, 0.02, 0.3);
  for (double t : {0.1, 1.7, 3.3}) {
    const double ph = 4.0 * t + 0.02 * t * t;
    const double dt = s.splitting() - 4.0 - 2.0 * 0.02 * t;
    const double ue = s.u() * 0.3, ve = s.v() * 0.3;
    const Vec3 expected(2.0 * (0.5 * dt + ve * std::sin(ph)), 2.0 * (-0.5 * ue + 0.5 * ue * std::cos(2 * ph)),
                        2.0 * (0.5 * ue * std::sin(2 * ph)));
    EXPECT_LE((rotating_h(s, d, t).h - expected).norm(), 1e-13);
  }
}

TEST(RotatingH, PeriodPointsLeaveOnlyDetuning) {
  const TlsParams s(0.8, 0.6);
  const ChirpDrive d = drive(kTwoPi * 5.9, 0.04, kTwoPi * 0.027, 400);
  const PeriodGrid g = build_grid(d);
  for (int j = 0; j <= d.n_periods; ++j) {
    const PauliVector h = rotating_h(s, d, g.t(j));
    EXPECT_NEAR(h.h.x(), detuning_at(s, d, g.t(j)), 1e-12);
    EXPECT_NEAR(h.h.y(), 0.0, 1e-12);
    EXPECT_NEAR(h.h.z(), 0.0, 1e-12);
  }
}

TEST(RotatingH, NoDriveIsPureDetuning) {
  const TlsParams s(0.8, 0.6);
  const ChirpDrive d = drive(4.0, 0.02, 0.0);
  EXPECT_EQ(rotating_h(s, d, 2.2).h, Vec3(detuning_at(s, d, 2.2), 0.0, 0.0));
}

TEST(RotatingH, PeriodAverageIsRwa) {
  // Trapezoid rule over one full period integrates the 1, 2 phi harmonics exactly.
  const TlsParams s(0.8, 0.6);
  const ChirpDrive d = drive(3.0, 0.0, 0.2);
  const double period = kTwoPi / 3.0;
  const int n = 256;
  Vec3 avg = Vec3::Zero();
  for (int k = 0; k < n; ++k) avg += rotating_h(s, d, period * k / n).h;
  avg /= n;
  EXPECT_LE((avg - rwa_h(s, d, 0.0).h).norm(), 1e-14);
}

TEST(RwaH, Examples) {
  const TlsParams s(0.8, 0.6);
  EXPECT_EQ(rwa_h(s, drive(1.0, 0.0, 0.2), 5.0).h, Vec3(0.0, -s.u() * 0.2, 0.0));
  const TlsParams sym(2.0, 0.0);
  const ChirpDrive d = drive(1.5, 0.1, 0.2);
  EXPECT_EQ(rwa_h(sym, d, 0.7).h, Vec3(detuning_at(sym, d, 0.7), -0.2, 0.0));
  const double crossing = (2.0 - 1.5) / 0.2;
  EXPECT_NEAR(rwa_h(sym, d, crossing).h.norm(), 0.2, 1e-15);
}

TEST(HEff, SymmetricFirstOrder) {
  const TlsParams s(kTwoPi * 6.0, 0.0);
  const double eta = kTwoPi * 0.027;
  const ChirpDrive d = drive(kTwoPi * 5.9, 1.5 * eta * eta, eta, 50);
  const PeriodGrid g = build_grid(d);
  for (int j = 1; j <= 50; ++j) {
    const EffectiveHamiltonian eff = h_eff(s, d, g, j, MagnusOrder::First);
    const double dm = shorthand_delta(s, d, g, j - 1) - d.alpha * g.tau(j);
    const double e = std::sqrt(eta * eta + dm * dm);
    EXPECT_NEAR(eff.energy, e, 1e-13);
    EXPECT_LE((eff.axis - Vec3(dm, -eta, 0.0) / e).norm(), 1e-15);
    EXPECT_EQ(eff.tau, g.tau(j));
  }
  EXPECT_THROW(h_eff(s, d, g, 0, MagnusOrder::First), std::out_of_range);
  EXPECT_THROW(h_eff(s, d, g, 51, MagnusOrder::First), std::out_of_range);
}

TEST(HEff, HarmonicFirstOrderIsConstant) {
  const TlsParams s(0.8, 0.6);
  const ChirpDrive d = drive(1.3, 0.0, 0.05, 30);
  const PeriodGrid g = build_grid(d);
  for (int j = 1; j <= 30; ++j) {
    EXPECT_EQ(h_eff(s, d, g, j, MagnusOrder::First).pv.h, Vec3(1.0 - 1.3, -0.8 * 0.05, 0.0));
  }
}

TEST(HEff, HarmonicSecondOrderBlochSiegertShift) {
  const TlsParams s(2.0, 0.0);
  const double eta = 0.04, w0 = 2.1;
  const ChirpDrive d = drive(w0, 0.0, eta, 3);
  const PeriodGrid g = build_grid(d);
  const SecondOrderTerms t = second_order_terms(s, d, g, 2);
  EXPECT_DOUBLE_EQ(t.harmonic.x(), -3.0 * eta * eta / (4.0 * w0));
  EXPECT_EQ(t.chirp, Vec3::Zero());
  EXPECT_EQ(t.harmonic.z(), 0.0);
}

TEST(HEff, SecondOrderTermsMatchDisplay) {
  // Each sigma/2 coefficient written out separately.
  const TlsParams s(0.8, 0.6);
  const double eta = 0.07, alpha = 0.003;
  const ChirpDrive d = drive(2.4, alpha, eta, 12);
  const PeriodGrid g = build_grid(d);
  for (int j = 1; j <= 12; ++j) {
    const double w = 2.4 + 2.0 * alpha * g.t(j - 1);
    const double dj = s.splitting() - 2.4 - 2.0 * alpha * g.t(j - 1);
    const double dm = dj - alpha * g.tau(j);
    const double u = s.u(), v = s.v();
    const Vec3 first(dm, -u * eta, 0.0);
    const Vec3 second(-3.0 * (eta * u) * (eta * u) / (4.0 * w) + 4.0 * alpha / (w * w) * v * eta,
                      -u * eta * dm / (2.0 * w),
                      2.0 * eta * eta * u * v / w + alpha / (w * w) * u * eta);
    const EffectiveHamiltonian eff = h_eff(s, d, g, j, MagnusOrder::FirstPlusSecond);
    EXPECT_LE((eff.pv.h - (first + second)).norm(), 1e-15);
  }
}

TEST(HEff, SecondOrderSmallAtWeakDrive) {
  const double w0 = 10.0;
  const TlsParams s(w0, 0.0);
  const ChirpDrive d = drive(w0, 0.0, 1e-3 * w0, 2);
  const PeriodGrid g = build_grid(d);
  const Vec3 h1 = h_eff(s, d, g, 1, MagnusOrder::First).pv.h;
  const Vec3 h2 = second_order_terms(s, d, g, 1).total();
  EXPECT_LE(h2.norm() / h1.norm(), 2e-3);
}

TEST(HEff, ChirpTermsLinearInAlpha) {
  const TlsParams s(0.8, 0.6);
  const double w = 3.7, eta = 0.05;
  for (double alpha : {1e-4, 3e-3, 0.02, -0.01}) {
    const Vec3 full = chirp_terms(s, eta, alpha, w);
    const Vec3 half = chirp_terms(s, eta, 0.5 * alpha, w);
    EXPECT_LE((full - 2.0 * half).norm(), 1e-12 * full.norm());
  }
  EXPECT_EQ(chirp_terms(s, eta, 0.0, w), Vec3::Zero());
}
