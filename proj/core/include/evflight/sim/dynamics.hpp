#pragma once

#include "evflight/sim/types.hpp"

namespace evflight::sim {

// Thrust (N, up along -z_body) and body torques (N m) produced by a motor
// set. X configuration, motor order [front-right, back-left, front-left,
// back-right]; FR/BL spin CCW seen from above, FL/BR spin CW.
//
// Axes are aero-standard: body x forward, y right, z down. Positive roll
// torque lowers the right side, so +tau_x raises the left pair's thrust.
struct ThrustTorque {
  double thrust = 0;  // N
  double tau_x = 0, tau_y = 0, tau_z = 0;  // N m
};

ThrustTorque motor_wrench(const MotorSpeeds& motors, const PhysicalParams& params);

struct StepResult {
  DroneState state;
  bool crashed = false;
};

// One RK4 step of the rigid body under constant motor speeds.
// dt must be in (0, 0.005]. Throws std::runtime_error if the state goes
// non-finite. Ground contact (z <= 0) sets the crash flag.
StepResult step_full_dynamics(const DroneState& state, const MotorSpeeds& motors,
                              const PhysicalParams& params, double dt);

// First-order rotor lag toward commanded speeds, clamped to [0, max].
MotorSpeeds motor_lag(const MotorSpeeds& current, const MotorSpeeds& commanded,
                      const PhysicalParams& params, double dt);

// Kinetic + potential energy; drag-free sanity checks only.
double mechanical_energy(const DroneState& s, const PhysicalParams& params);

}  // namespace evflight::sim
