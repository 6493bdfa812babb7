#include "ctls/chirp_protocol.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ctls;

namespace {

ChirpDrive drive(double omega0, double alpha, int n = 10, double eta = 0.1) {
  ChirpDrive d;
  d.omega0 = omega0;
  d.alpha = alpha;
  d.eta = eta;
  d.n_periods = n;
  return d;
}

double residual(const ChirpDrive& d, double t, long j) {
  return std::abs(omega_at(d, t) * t - kTwoPi * static_cast<double>(j));
}

}  // namespace

TEST(TlsParams, DerivedQuantities) {
  const TlsParams s(4.0, 3.0);
  EXPECT_DOUBLE_EQ(s.splitting(), 5.0);
  EXPECT_DOUBLE_EQ(s.u(), 0.8);
  EXPECT_DOUBLE_EQ(s.v(), 0.6);
  EXPECT_NEAR(s.u() * s.u() + s.v() * s.v(), 1.0, 1e-14);
  EXPECT_THROW(TlsParams(0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(TlsParams(NAN, 1.0), std::invalid_argument);
}

TEST(ChirpDrive, Validation) {
  EXPECT_NO_THROW(drive(1.0, 0.1).validate());
  EXPECT_THROW(drive(0.0, 0.1).validate(), std::invalid_argument);
  EXPECT_THROW(drive(1.0, 0.1, 0).validate(), std::invalid_argument);
  EXPECT_THROW(drive(1.0, INFINITY).validate(), std::invalid_argument);
  EXPECT_THROW(drive(1.0, 0.1, 3, -1.0).validate(), std::invalid_argument);
}

TEST(OmegaAt, Examples) {
  EXPECT_DOUBLE_EQ(omega_at(drive(2.5, 0.0), 17.0), 2.5);
  EXPECT_DOUBLE_EQ(omega_at(drive(1.0, 0.1), 2.0), 1.2);
  // fig3 preset end point: 2pi*6.1 GHz reached after (0.2 GHz * 2pi)/alpha.
  const double eta = kTwoPi * 0.027;
  const ChirpDrive d = drive(kTwoPi * 5.9, 1.5 * eta * eta);
  EXPECT_NEAR(omega_at(d, kTwoPi * 0.2 / d.alpha), kTwoPi * 6.1, 1e-12);
}

TEST(DetuningAt, Examples) {
  const TlsParams s(3.0, 0.0);
  const ChirpDrive harmonic = drive(2.6, 0.0);
  EXPECT_DOUBLE_EQ(detuning_at(s, harmonic, 0.0), 3.0 - 2.6);
  EXPECT_DOUBLE_EQ(detuning_at(s, harmonic, 123.0), 3.0 - 2.6);

  const ChirpDrive d = drive(2.6, 0.05);
  const double crossing = (3.0 - 2.6) / (2.0 * 0.05);
  EXPECT_NEAR(detuning_at(s, d, crossing), 0.0, 1e-15);

  const double eta = kTwoPi * 0.027;
  const TlsParams fig3(kTwoPi * 6.0, 0.0);
  const ChirpDrive f = drive(kTwoPi * 5.9, 1.5 * eta * eta);
  EXPECT_NEAR(detuning_at(fig3, f, 0.0), kTwoPi * 0.1, 1e-13);
}

TEST(DrivePhase, ReducedIntoOnePeriod) {
  const ChirpDrive d = drive(37.0, 0.04);
  for (double t : {0.0, 0.3, 12.5, 1e3, 1e5}) {
    const double phi = drive_phase(d, t);
    EXPECT_GE(phi, 0.0);
    EXPECT_LT(phi, kTwoPi);
    EXPECT_NEAR(std::sin(phi), std::sin(37.0 * t + 0.04 * t * t), 1e-12 * std::max(1.0, 37.0 * t + 0.04 * t * t));
  }
}

TEST(PeriodPoint, Examples) {
  EXPECT_EQ(period_point(drive(1.0, 0.1), 0), 0.0);
  const ChirpDrive h = drive(2.0, 0.0);
  for (long j = 0; j < 50; ++j) EXPECT_EQ(period_point(h, j), kTwoPi * static_cast<double>(j) / 2.0);

  // Quadratic-root oracle: (-1 + sqrt(1 + 0.8 pi)) / 0.2, evaluated in 30-digit arithmetic.
  const ChirpDrive d = drive(1.0, 0.1);
  const double t1 = period_point(d, 1);
  EXPECT_NEAR(t1, 4.371864972981411, 1e-14);
  EXPECT_LE(residual(d, t1, 1), 1e-12);
}

TEST(PeriodPoint, RejectsTurnaround) {
  const ChirpDrive d = drive(1.0, -0.01);
  // Maximum phase omega0^2 / (4 |alpha|) = 25 < 2 pi * 4.
  EXPECT_NO_THROW(period_point(d, 3));
  EXPECT_THROW(period_point(d, 4), std::domain_error);
  EXPECT_THROW(period_point(d, -1), std::invalid_argument);
}

TEST(PeriodPoint, ResidualSmallChirp) {
  // alpha/omega0^2 ~ 3e-8: the naive root formula would cancel badly here.
  const double eta = kTwoPi * 0.027;
  const ChirpDrive d = drive(kTwoPi * 5.9, 1.5 * eta * eta);
  for (long j = 0; j <= 2000; ++j) {
    EXPECT_LE(residual(d, period_point(d, j), j), 1e-10 * std::max(1.0, kTwoPi * static_cast<double>(j)));
  }
}

TEST(BuildGrid, HarmonicUnitPeriods) {
  const PeriodGrid g = build_grid(drive(kTwoPi, 0.0, 3));
  ASSERT_EQ(g.size(), 4u);
  for (int j = 0; j <= 3; ++j) EXPECT_DOUBLE_EQ(g.t(j), j);
  for (int j = 1; j <= 3; ++j) {
    EXPECT_DOUBLE_EQ(g.tau(j), 1.0);
    EXPECT_DOUBLE_EQ(g.mean_omega(j), kTwoPi);
  }
}

TEST(BuildGrid, PositiveChirpShrinksPeriods) {
  const ChirpDrive d = drive(1.0, 0.01, 40);
  const PeriodGrid g = build_grid(d);
  for (int j = 2; j <= d.n_periods; ++j) EXPECT_LT(g.tau(j), g.tau(j - 1));
  for (int j = 1; j <= d.n_periods; ++j) {
    EXPECT_LE(shorthand_omega(d, g, j - 1), g.mean_omega(j));
    EXPECT_LE(g.mean_omega(j), shorthand_omega(d, g, j));
    EXPECT_NEAR(g.mean_omega(j) * g.tau(j), kTwoPi, 1e-14);
  }
}

TEST(BuildGrid, RejectsBadGrids) {
  EXPECT_THROW(build_grid(drive(1.0, -0.01, 10)), std::domain_error);
  EXPECT_THROW(build_grid(drive(1.0, 0.01, 0)), std::invalid_argument);
  EXPECT_THROW(PeriodGrid({0.0, 1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(PeriodGrid({0.5, 1.0}), std::invalid_argument);
}

TEST(BuildGrid, Fig3Size) {
  const double eta = kTwoPi * 0.027;
  ChirpDrive d = drive(kTwoPi * 5.9, 1.5 * eta * eta);
  // Oracle: walk the period points until omega(t_N) reaches 2pi*6.1 GHz.
  long n = 0;
  while (omega_at(d, period_point(d, n)) < kTwoPi * 6.1) ++n;
  EXPECT_EQ(periods_until(d, kTwoPi * 6.1), n);
  EXPECT_NEAR(static_cast<double>(n), 175.0, 5.0);
  d.n_periods = static_cast<int>(n);
  const PeriodGrid g = build_grid(d);
  EXPECT_NEAR(g.times().back(), 29.0, 0.5);
}

TEST(PeriodsUntil, DownwardChirp) {
  const ChirpDrive d = drive(kTwoPi * 6.1, -kTwoPi * 0.001);
  const int n = periods_until(d, kTwoPi * 5.9);
  EXPECT_LE(omega_at(d, period_point(d, n)), kTwoPi * 5.9);
  EXPECT_GT(omega_at(d, period_point(d, n - 1)), kTwoPi * 5.9);
  EXPECT_THROW(periods_until(d, kTwoPi * 6.2), std::invalid_argument);
  EXPECT_THROW(periods_until(drive(1.0, 0.0), 2.0), std::invalid_argument);
}

TEST(Shorthand, Examples) {
  const TlsParams s(3.0, 1.0);
  const ChirpDrive d = drive(2.5, 0.02, 20);
  const PeriodGrid g = build_grid(d);
  EXPECT_EQ(shorthand_omega(d, g, 0), 2.5);
  EXPECT_EQ(shorthand_delta(s, d, g, 0), s.splitting() - 2.5);
  for (int j = 0; j <= 20; ++j) {
    EXPECT_NEAR(shorthand_omega(d, g, j) - omega_at(d, g.t(j)), d.alpha * g.t(j), 1e-14);
  }
  EXPECT_THROW(shorthand_omega(d, g, 21), std::out_of_range);
  EXPECT_THROW(shorthand_delta(s, d, g, -1), std::out_of_range);

  const ChirpDrive h = drive(2.5, 0.0, 5);
  const PeriodGrid gh = build_grid(h);
  for (int j = 0; j <= 5; ++j) {
    EXPECT_EQ(shorthand_omega(h, gh, j), 2.5);
    EXPECT_EQ(shorthand_delta(s, h, gh, j), s.splitting() - 2.5);
  }
}

TEST(Validity, FlagsStrongDriveAndChirp) {
  const ChirpDrive weak = drive(40.0, 0.01, 10, 0.2);
  EXPECT_TRUE(validity(weak, build_grid(weak)).ok());
  const ChirpDrive strong = drive(1.0, 0.05, 5, 0.5);
  const ValidityReport r = validity(strong, build_grid(strong));
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.warnings().size(), 2u);
}
