#pragma once

// SU(2)/SO(3) algebra for a single two-level system.
//
// Hamiltonians are stored in the Pauli basis as H = h0*1 + (h . sigma)/2 so
// that |h| is directly the level splitting E. The Bloch map generated by a
// constant H over a time tau is the right-handed rotation about h/|h| by
// E*tau; every propagator in the library reproduces this map in the
// constant-field limit.

#include <Eigen/Dense>

#include <complex>

namespace ctls {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat2c = Eigen::Matrix2cd;

/// Coefficients of H = h0*1 + (hx sx + hy sy + hz sz)/2 (angular frequency).
struct PauliVector {
  double h0 = 0.0;
  Vec3 h = Vec3::Zero();

  PauliVector() = default;
  PauliVector(double hx, double hy, double hz, double offset = 0.0)
      : h0(offset), h(hx, hy, hz) {}
  explicit PauliVector(const Vec3& v, double offset = 0.0) : h0(offset), h(v) {}

  PauliVector operator+(const PauliVector& o) const { return PauliVector(h + o.h, h0 + o.h0); }
};

/// Energy/axis split of a PauliVector: h = energy * axis.
struct Decomposition {
  double energy = 0.0;
  Vec3 axis = Vec3::UnitX();
  bool degenerate = false;  // energy == 0, axis is the (1,0,0) convention
};

/// Rotation about a unit axis by angle = E*tau (radians).
struct AxisAngle {
  Vec3 axis = Vec3::UnitX();
  double angle = 0.0;
};

struct RotationMatrix {
  Mat3 m = Mat3::Identity();
};

struct BlochVector {
  Vec3 r = Vec3::Zero();

  BlochVector() = default;
  BlochVector(double x, double y, double z) : r(x, y, z) {}
  explicit BlochVector(const Vec3& v) : r(v) {}

  double x() const { return r.x(); }
  double y() const { return r.y(); }
  double z() const { return r.z(); }
  double norm() const { return r.norm(); }
};

Decomposition decompose(const PauliVector& pv);

/// Axis and rotation angle of the evolution under a constant pv for time tau.
/// The angle is formed as E*tau before any trigonometry.
AxisAngle axis_angle(const PauliVector& pv, double tau);

/// Rodrigues form: c + e_i^2(1-c) on the diagonal, e_i e_j (1-c) -/+ e_k s
/// off the diagonal. Throws std::invalid_argument if |axis| != 1.
RotationMatrix rotation_matrix(const AxisAngle& aa);

/// cos(angle/2)*1 + i sin(angle/2) (e . sigma). Throws for a non-unit axis.
Mat2c su2_exponential(const AxisAngle& aa);

/// SO(3) image of an SU(2) element under rho -> U^dagger rho U:
/// M_ab = Tr[sigma_a U^dagger sigma_b U] / 2.
RotationMatrix bloch_map(const Mat2c& u);

BlochVector apply(const RotationMatrix& m, const BlochVector& r);

RotationMatrix compose(const RotationMatrix& later, const RotationMatrix& earlier);

/// Rotation vector (axis * angle, angle in [0, pi]) of a proper rotation.
Vec3 rotation_vector(const RotationMatrix& m);

const Mat2c& pauli(int a);

/// 2x2 matrix h0*1 + (h . sigma)/2.
Mat2c to_matrix(const PauliVector& pv);

/// Largest entry of |M^T M - 1| and |det M - 1|.
double orthogonality_defect(const RotationMatrix& m);

}  // namespace ctls
