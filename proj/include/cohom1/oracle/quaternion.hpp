#pragma once

#include <cmath>

#include <Eigen/Dense>

#include "cohom1/errors.hpp"

namespace cohom1::oracle {

struct Quaternion {
  double w = 1, x = 0, y = 0, z = 0;

  static Quaternion exp_i(double t) { return {std::cos(t), std::sin(t), 0, 0}; }

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  Quaternion conj() const { return {w, -x, -y, -z}; }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }

  Quaternion normalized() const {
    const double n = norm();
    if (n == 0) throw NormalizationError("zero quaternion");
    return {w / n, x / n, y / n, z / n};
  }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }

  Eigen::Vector4d vec() const { return {w, x, y, z}; }
  static Quaternion from_vec(const Eigen::Vector4d& v) { return {v(0), v(1), v(2), v(3)}; }
};

inline double distance(const Quaternion& a, const Quaternion& b) { return (a.vec() - b.vec()).norm(); }

/// Product renormalized to the unit sphere.
inline Quaternion unit_mul(const Quaternion& a, const Quaternion& b) { return (a * b).normalized(); }

inline void require_unit(const Quaternion& q) {
  if (std::abs(q.norm() - 1) > 1e-9) throw NormalizationError("quaternion is not a unit quaternion");
}

/// psi(q): x -> q x q^-1 on the imaginary quaternions, basis (i, j, k).
inline Eigen::Matrix3d so3_cover(const Quaternion& q) {
  require_unit(q);
  Eigen::Matrix3d m;
  const Quaternion basis[3] = {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int c = 0; c < 3; ++c) {
    const auto v = q * basis[c] * q.conj();
    m.col(c) << v.x, v.y, v.z;
  }
  return m;
}

/// (p, q) -> (x -> p x q^-1) on H = R^4, basis (1, i, j, k).
inline Eigen::Matrix4d so4_cover(const Quaternion& p, const Quaternion& q) {
  require_unit(p);
  require_unit(q);
  Eigen::Matrix4d m;
  const Quaternion basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int c = 0; c < 4; ++c) m.col(c) = (p * basis[c] * q.conj()).vec();
  return m;
}

/// One of the two unit quaternions covering a rotation.
inline Quaternion so3_lift(const Eigen::Matrix3d& r) {
  // Largest-diagonal branch keeps the division well conditioned.
  const double t = r.trace();
  Quaternion q;
  if (t >= r(0, 0) && t >= r(1, 1) && t >= r(2, 2)) {
    const double s = std::sqrt(1 + t) * 2;
    q = {s / 4, (r(2, 1) - r(1, 2)) / s, (r(0, 2) - r(2, 0)) / s, (r(1, 0) - r(0, 1)) / s};
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    const double s = std::sqrt(1 + r(0, 0) - r(1, 1) - r(2, 2)) * 2;
    q = {(r(2, 1) - r(1, 2)) / s, s / 4, (r(0, 1) + r(1, 0)) / s, (r(0, 2) + r(2, 0)) / s};
  } else if (r(1, 1) >= r(2, 2)) {
    const double s = std::sqrt(1 + r(1, 1) - r(0, 0) - r(2, 2)) * 2;
    q = {(r(0, 2) - r(2, 0)) / s, (r(0, 1) + r(1, 0)) / s, s / 4, (r(1, 2) + r(2, 1)) / s};
  } else {
    const double s = std::sqrt(1 + r(2, 2) - r(0, 0) - r(1, 1)) * 2;
    q = {(r(1, 0) - r(0, 1)) / s, (r(0, 2) + r(2, 0)) / s, (r(1, 2) + r(2, 1)) / s, s / 4};
  }
  return q.normalized();
}

/// One of the two pairs (p, q) covering a rotation of R^4. With u = M(1) = p q^-1,
/// x -> M(x) u^-1 is conjugation by p, and q = u^-1 p.
inline std::pair<Quaternion, Quaternion> so4_lift(const Eigen::Matrix4d& m) {
  const Quaternion u = Quaternion::from_vec(m.col(0)).normalized();
  Eigen::Matrix3d conj;
  const Quaternion basis[3] = {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int c = 0; c < 3; ++c) {
    Eigen::Vector4d img;
    const Quaternion b = basis[c];
    img = m * b.vec();
    const auto v = Quaternion::from_vec(img) * u.conj();
    conj.col(c) << v.x, v.y, v.z;
  }
  const Quaternion p = so3_lift(conj);
  return {p, unit_mul(u.conj(), p)};
}

}  // namespace cohom1::oracle
