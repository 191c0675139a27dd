#include "evflight/ctl/control.hpp"

#include <algorithm>
#include <cmath>

namespace evflight::ctl {

using sim::MotorSpeeds;
using sim::PhysicalParams;

RateSetpoint attitude_p(const ControlGains& g, double roll_sp, double pitch_sp,
                        double roll_est, double pitch_est) {
  RateSetpoint out;
  out.p = std::clamp(g.att_p * (roll_sp - roll_est), -g.rate_sp_limit, g.rate_sp_limit);
  out.q = std::clamp(g.att_p * (pitch_sp - pitch_est), -g.rate_sp_limit, g.rate_sp_limit);
  return out;
}

void rate_pid(const ControlGains& g, const RateSetpoint& sp, double p_est,
              double q_est, double dt, RatePidState& st, ControlCommand& cmd) {
  if (!st.d_primed) {
    st.d_roll = p_est;
    st.d_pitch = q_est;
    st.d_primed = true;
  }
  const double alpha = dt / (g.d_lpf_tau + dt);

  auto axis = [&](double rate_sp, double rate, double& i_term, double& d_filt) {
    const double err = rate_sp - rate;
    i_term = std::clamp(i_term + g.rate_ki * err * dt, -g.rate_i_clamp, g.rate_i_clamp);
    const double prev = d_filt;
    d_filt += alpha * (rate - d_filt);
    const double ddt = (d_filt - prev) / dt;  // derivative of measurement
    return g.rate_kp * err + i_term - g.rate_kd * ddt;
  };

  cmd.tau_x = axis(sp.p, p_est, st.i_roll, st.d_roll);
  cmd.tau_y = axis(sp.q, q_est, st.i_pitch, st.d_pitch);
}

void reset_integrators(RatePidState& st) {
  st.i_roll = 0;
  st.i_pitch = 0;
  st.d_primed = false;
}

double yaw_control(const ControlGains& g, double yaw_true, double r_true) {
  const double r_sp = g.yaw_att_p * (0.0 - yaw_true);
  return g.yaw_rate_p * (r_sp - r_true);
}

MixResult mix(const ControlCommand& cmd, const PhysicalParams& pp) {
  MixResult out;
  const double d = pp.arm_length / std::sqrt(2.0);
  const double kappa = pp.torque_coeff / pp.thrust_coeff;
  const double f_max = pp.thrust_coeff * pp.motor_max_speed * pp.motor_max_speed;

  // Per-motor thrust offsets from roll/pitch (fixed) and yaw (sacrificable).
  const double rx = cmd.tau_x / d, ry = cmd.tau_y / d, rz = cmd.tau_z / kappa;
  const double o[4] = {0.25 * (-rx + ry), 0.25 * (rx - ry),
                       0.25 * (rx + ry), 0.25 * (-rx - ry)};
  const double yz[4] = {0.25 * rz, 0.25 * rz, -0.25 * rz, -0.25 * rz};

  double gamma = 1.0;  // yaw authority scale
  double T = cmd.thrust;
  for (int pass = 0; pass < 2; ++pass) {
    double lo = o[0] + gamma * yz[0], hi = lo;
    for (int i = 1; i < 4; ++i) {
      lo = std::min(lo, o[i] + gamma * yz[i]);
      hi = std::max(hi, o[i] + gamma * yz[i]);
    }
    const double t_min = -4.0 * lo;
    const double t_max = 4.0 * (f_max - hi);
    if (t_min <= t_max) {
      const double t_fit = std::clamp(T, std::max(t_min, 0.0), t_max);
      if (t_fit != T) out.saturated = true;
      T = t_fit;
      break;
    }
    if (pass == 0) {
      gamma = 0.0;  // drop yaw before touching roll/pitch
      out.saturated = true;
    } else {
      out.clipped = true;  // roll/pitch alone exceeds motor range
    }
  }

  for (int i = 0; i < 4; ++i) {
    double f = 0.25 * T + o[i] + gamma * yz[i];
    if (f < 0.0 || f > f_max) {
      out.clipped = true;
      f = std::clamp(f, 0.0, f_max);
    }
    out.motors[i] = std::sqrt(f / pp.thrust_coeff);
  }
  return out;
}

AttitudeSetpoint position_hold(const ControlGains& g, double x_sp, double y_sp,
                               double z_sp, const sim::DroneState& s,
                               const PhysicalParams& pp) {
  auto vel_sp = [&](double err) {
    return std::clamp(g.pos_p * err, -g.vel_limit, g.vel_limit);
  };
  const double ax = g.vel_p * (vel_sp(x_sp - s.x) - s.vx);
  const double ay = g.vel_p * (vel_sp(y_sp - s.y) - s.vy);

  AttitudeSetpoint out;
  // Horizontal accel from thrust tilt: a_x = -g tan(pitch), a_y = +g tan(roll).
  out.pitch = std::clamp(std::atan2(-ax, pp.gravity), -g.tilt_limit, g.tilt_limit);
  out.roll = std::clamp(std::atan2(ay, pp.gravity), -g.tilt_limit, g.tilt_limit);

  const double az = g.alt_p * (z_sp - s.z) + g.alt_d * (0.0 - s.vz);
  const double ct = std::cos(s.roll) * std::cos(s.pitch);
  const double tilt_comp = std::max(ct, 0.5);
  out.thrust = pp.mass * (pp.gravity + az) / tilt_comp;
  out.thrust = std::clamp(out.thrust, 0.0, 4.0 * pp.thrust_coeff *
                          pp.motor_max_speed * pp.motor_max_speed);
  return out;
}

}  // namespace evflight::ctl
