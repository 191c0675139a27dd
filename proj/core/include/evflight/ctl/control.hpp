#pragma once

#include "evflight/sim/types.hpp"

namespace evflight::ctl {

struct ControlGains {
  // attitude P: rate setpoint per attitude error
  double att_p = 6.0;            // 1/s
  double rate_sp_limit = sim::deg2rad(200.0);  // rad/s

  // rate PID (torque units, N m per rad/s)
  double rate_kp = 0.10;
  double rate_ki = 0.30;
  double rate_kd = 0.002;
  double rate_i_clamp = 0.05;    // N m
  double d_lpf_tau = 0.020;      // s, derivative-on-measurement low-pass

  // yaw rate loop (always ground-truth fed)
  double yaw_att_p = 3.0;        // 1/s
  double yaw_rate_p = 0.05;      // N m per rad/s

  // outer position loop
  double pos_p = 1.2;            // (m/s) per m
  double vel_p = 2.0;            // (m/s^2) per (m/s)
  double vel_limit = 2.0;        // m/s
  double tilt_limit = sim::deg2rad(15.0);
  double alt_p = 4.0;            // (m/s^2) per m
  double alt_d = 3.0;            // (m/s^2) per (m/s)
};

struct ControlCommand {
  double tau_x = 0, tau_y = 0, tau_z = 0;  // N m
  double thrust = 0;                        // N, along -z_body
};

struct RateSetpoint {
  double p = 0, q = 0;  // rad/s
};

struct AttitudeSetpoint {
  double roll = 0, pitch = 0;  // rad
  double thrust = 0;           // N
};

// Integrator and derivative-filter memory of the rate PID.
struct RatePidState {
  double i_roll = 0, i_pitch = 0;
  double d_roll = 0, d_pitch = 0;
  bool d_primed = false;
};

// First layer: proportional on attitude error, clamped rate setpoints.
RateSetpoint attitude_p(const ControlGains& g, double roll_sp, double pitch_sp,
                        double roll_est, double pitch_est);

// Second layer: PID on rate error with anti-windup clamp and derivative on
// the measurement through a first-order low-pass. dt is the 5 ms tick.
void rate_pid(const ControlGains& g, const RateSetpoint& sp, double p_est,
              double q_est, double dt, RatePidState& state, ControlCommand& cmd);

// Zeroes the I terms and re-primes the derivative filter; called at
// estimate-source switches.
void reset_integrators(RatePidState& state);

// Ground-truth yaw stabilization (the estimator does not output yaw).
double yaw_control(const ControlGains& g, double yaw_true, double r_true);

struct MixResult {
  sim::MotorSpeeds motors;
  bool saturated = false;  // yaw was scaled or thrust moved
  bool clipped = false;    // roll/pitch infeasible even after prioritization
};

// Inverse allocation for the X configuration. Saturation is resolved by
// prioritizing roll/pitch torque over thrust over yaw.
MixResult mix(const ControlCommand& cmd, const sim::PhysicalParams& params);

// Outer loop: cascaded P position -> P velocity -> attitude setpoints with
// ground-truth state (stands in for the flow/rangefinder sensors), plus
// altitude-hold thrust.
AttitudeSetpoint position_hold(const ControlGains& g, double x_sp, double y_sp,
                               double z_sp, const sim::DroneState& truth,
                               const sim::PhysicalParams& params);

}  // namespace evflight::ctl
