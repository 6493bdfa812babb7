#include "ctls/su2.hpp"

#include <Eigen/Geometry>

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ctls {

namespace {

constexpr double kUnitAxisTol = 1e-12;

void require_unit(const Vec3& e, const char* where) {
  const double n = e.norm();
  if (!(std::abs(n - 1.0) <= kUnitAxisTol)) {
    throw std::invalid_argument(std::string(where) + ": rotation axis is not a unit vector (|e| = " +
                                std::to_string(n) + ")");
  }
}

}  // namespace

Decomposition decompose(const PauliVector& pv) {
  Decomposition d;
  d.energy = pv.h.norm();
  if (d.energy > 0.0) {
    d.axis = pv.h / d.energy;
  } else {
    d.axis = Vec3::UnitX();
    d.degenerate = true;
  }
  return d;
}

AxisAngle axis_angle(const PauliVector& pv, double tau) {
  const Decomposition d = decompose(pv);
  return {d.axis, d.energy * tau};
}

RotationMatrix rotation_matrix(const AxisAngle& aa) {
  require_unit(aa.axis, "rotation_matrix");
  const double c = std::cos(aa.angle);
  const double s = std::sin(aa.angle);
  const double sh = std::sin(0.5 * aa.angle);
  const double omc = 2.0 * sh * sh;  // 1 - cos, without cancellation at small angles
  const double ex = aa.axis.x(), ey = aa.axis.y(), ez = aa.axis.z();

  RotationMatrix r;
  r.m << c + ex * ex * omc, ex * ey * omc - ez * s, ex * ez * omc + ey * s,
         ex * ey * omc + ez * s, c + ey * ey * omc, ey * ez * omc - ex * s,
         ex * ez * omc - ey * s, ey * ez * omc + ex * s, c + ez * ez * omc;
  return r;
}

const Mat2c& pauli(int a) {
  using C = std::complex<double>;
  static const std::array<Mat2c, 3> sigma = [] {
    std::array<Mat2c, 3> s;
    s[0] << C(0, 0), C(1, 0), C(1, 0), C(0, 0);
    s[1] << C(0, 0), C(0, -1), C(0, 1), C(0, 0);
    s[2] << C(1, 0), C(0, 0), C(0, 0), C(-1, 0);
    return s;
  }();
  return sigma.at(static_cast<std::size_t>(a));
}

Mat2c su2_exponential(const AxisAngle& aa) {
  require_unit(aa.axis, "su2_exponential");
  const std::complex<double> i(0.0, 1.0);
  Mat2c u = std::cos(0.5 * aa.angle) * Mat2c::Identity();
  const std::complex<double> f = i * std::sin(0.5 * aa.angle);
  for (int a = 0; a < 3; ++a) u += f * aa.axis[a] * pauli(a);
  return u;
}

RotationMatrix bloch_map(const Mat2c& u) {
  RotationMatrix r;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      r.m(a, b) = 0.5 * (pauli(a) * u.adjoint() * pauli(b) * u).trace().real();
    }
  }
  return r;
}

BlochVector apply(const RotationMatrix& m, const BlochVector& r) { return BlochVector(Vec3(m.m * r.r)); }

RotationMatrix compose(const RotationMatrix& later, const RotationMatrix& earlier) {
  return {later.m * earlier.m};
}

Vec3 rotation_vector(const RotationMatrix& m) {
  const Eigen::AngleAxisd aa(m.m);
  return aa.axis() * aa.angle();
}

Mat2c to_matrix(const PauliVector& pv) {
  Mat2c h = pv.h0 * Mat2c::Identity();
  for (int a = 0; a < 3; ++a) h += 0.5 * pv.h[a] * pauli(a);
  return h;
}

double orthogonality_defect(const RotationMatrix& m) {
  const double orth = (m.m.transpose() * m.m - Mat3::Identity()).cwiseAbs().maxCoeff();
  return std::max(orth, std::abs(m.m.determinant() - 1.0));
}

}  // namespace ctls
