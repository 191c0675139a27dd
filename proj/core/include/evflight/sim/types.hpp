#pragma once

#include <array>
#include <cmath>

namespace evflight::sim {

inline constexpr double kGravity = 9.81;  // m/s^2
inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// Rigid-body and rotor constants. Values the source system does not publish
// (inertia, thrust map) default to a generic 5-inch ~0.8 kg quadrotor.
struct PhysicalParams {
  double mass = 0.8;             // kg
  double inertia_xx = 0.0045;    // kg m^2
  double inertia_yy = 0.0045;    // kg m^2
  double inertia_zz = 0.0080;    // kg m^2
  double arm_length = 0.125;     // m, center to motor
  double gravity = kGravity;     // m/s^2, fixed
  double thrust_coeff = 1.3625e-6;  // N/(rad/s)^2
  double torque_coeff = 2.1800e-8;  // N m/(rad/s)^2
  double motor_max_speed = 2400.0;  // rad/s
  double motor_tau = 0.030;         // s, first-order rotor lag
  double linear_drag = 0.25;        // N/(m/s), world-frame body drag

  bool valid() const {
    return mass > 0 && inertia_xx > 0 && inertia_yy > 0 && inertia_zz > 0 &&
           arm_length > 0 && thrust_coeff > 0 && torque_coeff > 0 &&
           motor_max_speed > 0 && gravity == kGravity;
  }

  // Per-motor speed that balances gravity with four level motors.
  double hover_speed() const {
    return std::sqrt(mass * gravity / (4.0 * thrust_coeff));
  }
};

// Full rigid-body state. World axes: x forward, y right, z = height above
// ground (up-positive). Velocities are world-frame components in the same
// axes; with yaw held near zero (the estimator never outputs yaw), vy is the
// lateral velocity of the reduced planar model.
struct DroneState {
  double x = 0, y = 0, z = 1.0;     // m
  double vx = 0, vy = 0, vz = 0;    // m/s, vz up-positive
  double roll = 0, pitch = 0, yaw = 0;  // rad
  double p = 0, q = 0, r = 0;       // rad/s body rates

  bool finite() const {
    for (double v : {x, y, z, vx, vy, vz, roll, pitch, yaw, p, q, r})
      if (!std::isfinite(v)) return false;
    return true;
  }
};

struct MotorSpeeds {
  std::array<double, 4> omega{0, 0, 0, 0};  // rad/s, [front-right, back-left, front-left, back-right]

  double& operator[](int i) { return omega[size_t(i)]; }
  double operator[](int i) const { return omega[size_t(i)]; }
};

// Reduced planar states of the roll-axis motion model.
struct PlanarState {
  double vy = 0;   // lateral velocity, m/s
  double roll = 0; // rad
  double z = 1.0;  // height, m
};

struct ExtendedState {
  double vy = 0;
  double roll = 0;
  double p = 0;    // roll rate, rad/s
  double z = 1.0;
};

}  // namespace evflight::sim
