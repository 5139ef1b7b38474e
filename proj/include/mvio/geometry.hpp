#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <cmath>
#include <cstdint>
#include <random>

namespace mvio {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Quat = Eigen::Quaterniond;

inline Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return m;
}

// exp of a rotation vector as a quaternion
inline Quat quat_exp(const Vec3& theta) {
  const double angle = theta.norm();
  if (angle < 1e-12) {
    Quat q(1.0, 0.5 * theta.x(), 0.5 * theta.y(), 0.5 * theta.z());
    q.normalize();
    return q;
  }
  const Vec3 axis = theta / angle;
  return Quat(Eigen::AngleAxisd(angle, axis));
}

// log map; inverse of quat_exp for rotations within (-pi, pi)
inline Vec3 quat_log(const Quat& q_in) {
  Quat q = q_in.normalized();
  if (q.w() < 0) q.coeffs() = -q.coeffs();
  const double sin_half = q.vec().norm();
  if (sin_half < 1e-12) return 2.0 * q.vec();
  const double half_angle = std::atan2(sin_half, q.w());
  return q.vec() * (2.0 * half_angle / sin_half);
}

// left-multiplication matrix: quat_left(q) * p.coeffs4 == (q ⊗ p)
// acting on [vec; w] ordering
inline Mat4 quat_left(const Quat& q) {
  Mat4 m;
  m.block<3, 3>(0, 0) = q.w() * Mat3::Identity() + skew(q.vec());
  m.block<3, 1>(0, 3) = q.vec();
  m.block<1, 3>(3, 0) = -q.vec().transpose();
  m(3, 3) = q.w();
  return m;
}

inline Mat4 quat_right(const Quat& q) {
  Mat4 m;
  m.block<3, 3>(0, 0) = q.w() * Mat3::Identity() - skew(q.vec());
  m.block<3, 1>(0, 3) = q.vec();
  m.block<1, 3>(3, 0) = -q.vec().transpose();
  m(3, 3) = q.w();
  return m;
}

// 2 * vec(q), the small-angle rotation error used by the factors
inline Vec3 quat_error(const Quat& q_in) {
  Quat q = q_in;
  if (q.w() < 0) q.coeffs() = -q.coeffs();
  return 2.0 * q.vec();
}

inline double yaw_of(const Quat& q) {
  const Mat3 r = q.toRotationMatrix();
  return std::atan2(r(1, 0), r(0, 0));
}

// rigid transform, used for sensor extrinsics and relative poses
struct Pose {
  Quat q = Quat::Identity();
  Vec3 p = Vec3::Zero();

  Pose() = default;
  Pose(const Quat& q_, const Vec3& p_) : q(q_.normalized()), p(p_) {}

  Vec3 operator*(const Vec3& x) const { return q * x + p; }
  Pose operator*(const Pose& other) const { return Pose(q * other.q, q * other.p + p); }
  Pose inverse() const {
    Quat qi = q.conjugate();
    return Pose(qi, -(qi * p));
  }
};

// Deterministic normal deviates (Box-Muller over mt19937_64) so that logs
// are byte-identical across standard library implementations.
class GaussianRng {
 public:
  explicit GaussianRng(uint64_t seed) : engine_(seed) {}

  double uniform() {
    // in (0, 1]; avoids log(0)
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  Vec3 gaussian3() { return Vec3(gaussian(), gaussian(), gaussian()); }

  uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace mvio
