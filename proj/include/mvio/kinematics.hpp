#pragma once

#include "mvio/geometry.hpp"

namespace mvio {

// Chassis dimensions. Wheel order follows the top view of the platform:
// 1 = front-left, 2 = front-right, 3 = rear-left, 4 = rear-right.
// +x is forward, +y is left, wheels count forward rotation as positive.
struct ChassisGeometry {
  double half_wheelbase = 0.25;   // a, meters
  double half_track = 0.25;       // b, meters
  double wheel_radius = 0.1;      // r, meters

  double wheel_center_radius() const {  // distance from chassis center to each wheel
    return std::sqrt(half_wheelbase * half_wheelbase + half_track * half_track);
  }
  bool valid() const { return half_wheelbase > 0 && half_track > 0 && wheel_radius > 0; }
};

struct ChassisTwist {
  double vx = 0;     // m/s
  double vy = 0;     // m/s
  double omega = 0;  // rad/s

  Vec3 vec() const { return Vec3(vx, vy, omega); }
  static ChassisTwist from_vec(const Vec3& v) { return {v.x(), v.y(), v.z()}; }
};

struct WheelSpeeds {
  double v[4] = {0, 0, 0, 0};  // wheel surface linear speed, m/s

  Vec4 vec() const { return Vec4(v[0], v[1], v[2], v[3]); }
  static WheelSpeeds from_vec(const Vec4& u) { return {{u(0), u(1), u(2), u(3)}}; }
};

struct WheelTorques {
  double tau[4] = {0, 0, 0, 0};  // N*m

  Vec4 vec() const { return Vec4(tau[0], tau[1], tau[2], tau[3]); }
  static WheelTorques from_vec(const Vec4& u) { return {{u(0), u(1), u(2), u(3)}}; }
};

struct ChassisWrench {
  double fx = 0;     // N
  double fy = 0;     // N
  double tau_o = 0;  // N*m about the chassis center

  Vec3 vec() const { return Vec3(fx, fy, tau_o); }
  static ChassisWrench from_vec(const Vec3& v) { return {v.x(), v.y(), v.z()}; }
};

// 4x3 wheel-speed matrix: v_wheel = K * [vx vy omega]
Eigen::Matrix<double, 4, 3> wheel_speed_matrix(const ChassisGeometry& geom);

// 3x4 pseudo-inverse of wheel_speed_matrix
Eigen::Matrix<double, 3, 4> chassis_speed_matrix(const ChassisGeometry& geom);

// 3x4 torque-to-wrench map: [Fx Fy tau_o] = T * tau, with per-wheel drive
// force tau_i / r resolved through the 45-degree roller geometry
Eigen::Matrix<double, 3, 4> torque_wrench_matrix(const ChassisGeometry& geom);

// 4x3 minimum-norm inverse of torque_wrench_matrix
Eigen::Matrix<double, 4, 3> wrench_torque_matrix(const ChassisGeometry& geom);

WheelSpeeds inverse_kinematics(const ChassisTwist& twist, const ChassisGeometry& geom);

// Least-squares chassis twist from all four wheels; exact inverse of
// inverse_kinematics whenever the rolling constraint holds.
ChassisTwist forward_kinematics(const WheelSpeeds& speeds, const ChassisGeometry& geom);

// Twist from the three wheels other than `excluded_wheel` (1..4), by exact
// inversion of the corresponding 3x3 sub-block of the wheel-speed matrix.
ChassisTwist forward_kinematics_three_wheel(const WheelSpeeds& speeds, int excluded_wheel,
                                            const ChassisGeometry& geom);

// Rolling constraint residual (v1 + v4) - (v2 + v3); zero for any
// kinematically consistent wheel-speed set.
double constraint_error(const WheelSpeeds& speeds);

ChassisWrench torques_to_wrench(const WheelTorques& torques, const ChassisGeometry& geom);

// Minimum-norm torque distribution realizing the wrench.
WheelTorques wrench_to_torques(const ChassisWrench& wrench, const ChassisGeometry& geom);

}  // namespace mvio
