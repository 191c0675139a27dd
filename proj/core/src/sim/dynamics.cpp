#include "evflight/sim/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

namespace evflight::sim {

namespace {

// Internal integration state in world axes x fwd / y right / z DOWN;
// DroneState exposes height and climb rate up-positive.
struct Body {
  double px, py, pz;      // z down
  double vx, vy, vz;      // z down
  double roll, pitch, yaw;
  double p, q, r;
};

Body to_body(const DroneState& s) {
  return {s.x, s.y, -s.z, s.vx, s.vy, -s.vz, s.roll, s.pitch, s.yaw, s.p, s.q, s.r};
}

DroneState from_body(const Body& b) {
  DroneState s;
  s.x = b.px; s.y = b.py; s.z = -b.pz;
  s.vx = b.vx; s.vy = b.vy; s.vz = -b.vz;
  s.roll = b.roll; s.pitch = b.pitch; s.yaw = b.yaw;
  s.p = b.p; s.q = b.q; s.r = b.r;
  return s;
}

Body deriv(const Body& s, const ThrustTorque& w, const PhysicalParams& pp) {
  const double cphi = std::cos(s.roll), sphi = std::sin(s.roll);
  const double cth = std::cos(s.pitch), sth = std::sin(s.pitch);
  const double cpsi = std::cos(s.yaw), spsi = std::sin(s.yaw);

  // Third column of R = Rz Ry Rx (body z axis in world).
  const double r13 = cpsi * sth * cphi + spsi * sphi;
  const double r23 = spsi * sth * cphi - cpsi * sphi;
  const double r33 = cth * cphi;

  Body d;
  d.px = s.vx; d.py = s.vy; d.pz = s.vz;

  const double a = -w.thrust / pp.mass;  // thrust along -z_body
  const double drag = pp.linear_drag / pp.mass;
  d.vx = r13 * a - drag * s.vx;
  d.vy = r23 * a - drag * s.vy;
  d.vz = r33 * a + pp.gravity - drag * s.vz;

  const double tth = sth / cth;
  d.roll = s.p + tth * (s.q * sphi + s.r * cphi);
  d.pitch = s.q * cphi - s.r * sphi;
  d.yaw = (s.q * sphi + s.r * cphi) / cth;

  const double Ix = pp.inertia_xx, Iy = pp.inertia_yy, Iz = pp.inertia_zz;
  d.p = (w.tau_x - (Iz - Iy) * s.q * s.r) / Ix;
  d.q = (w.tau_y - (Ix - Iz) * s.p * s.r) / Iy;
  d.r = (w.tau_z - (Iy - Ix) * s.p * s.q) / Iz;
  return d;
}

Body axpy(const Body& a, const Body& b, double h) {
  Body o;
  o.px = a.px + h * b.px; o.py = a.py + h * b.py; o.pz = a.pz + h * b.pz;
  o.vx = a.vx + h * b.vx; o.vy = a.vy + h * b.vy; o.vz = a.vz + h * b.vz;
  o.roll = a.roll + h * b.roll; o.pitch = a.pitch + h * b.pitch; o.yaw = a.yaw + h * b.yaw;
  o.p = a.p + h * b.p; o.q = a.q + h * b.q; o.r = a.r + h * b.r;
  return o;
}

}  // namespace

ThrustTorque motor_wrench(const MotorSpeeds& m, const PhysicalParams& pp) {
  const double d = pp.arm_length / std::sqrt(2.0);
  double f[4];
  for (int i = 0; i < 4; ++i) f[i] = pp.thrust_coeff * m[i] * m[i];
  ThrustTorque w;
  w.thrust = f[0] + f[1] + f[2] + f[3];
  // Motor positions (x fwd, y right): FR(+d,+d) BL(-d,-d) FL(+d,-d) BR(-d,+d)
  w.tau_x = d * (-f[0] + f[1] + f[2] - f[3]);
  w.tau_y = d * (f[0] - f[1] + f[2] - f[3]);
  // CCW-from-above props (FR, BL) yaw the body nose-right (+z down).
  w.tau_z = pp.torque_coeff * (m[0] * m[0] + m[1] * m[1] - m[2] * m[2] - m[3] * m[3]);
  return w;
}

StepResult step_full_dynamics(const DroneState& state, const MotorSpeeds& motors,
                              const PhysicalParams& params, double dt) {
  if (!(dt > 0.0 && dt <= 0.005))
    throw std::runtime_error("step_full_dynamics: dt outside (0, 0.005]");
  if (!state.finite())
    throw std::runtime_error("step_full_dynamics: non-finite input state");

  const ThrustTorque w = motor_wrench(motors, params);
  const Body s0 = to_body(state);
  const Body k1 = deriv(s0, w, params);
  const Body k2 = deriv(axpy(s0, k1, dt / 2), w, params);
  const Body k3 = deriv(axpy(s0, k2, dt / 2), w, params);
  const Body k4 = deriv(axpy(s0, k3, dt), w, params);

  Body s = s0;
  auto acc = [&](double Body::*f) {
    s.*f = s0.*f + dt / 6.0 * (k1.*f + 2 * k2.*f + 2 * k3.*f + k4.*f);
  };
  acc(&Body::px); acc(&Body::py); acc(&Body::pz);
  acc(&Body::vx); acc(&Body::vy); acc(&Body::vz);
  acc(&Body::roll); acc(&Body::pitch); acc(&Body::yaw);
  acc(&Body::p); acc(&Body::q); acc(&Body::r);

  StepResult out;
  out.state = from_body(s);
  if (!out.state.finite())
    throw std::runtime_error("step_full_dynamics: state went non-finite");
  out.crashed = out.state.z <= 0.0;
  return out;
}

MotorSpeeds motor_lag(const MotorSpeeds& current, const MotorSpeeds& commanded,
                      const PhysicalParams& params, double dt) {
  MotorSpeeds out;
  const double alpha = 1.0 - std::exp(-dt / params.motor_tau);
  for (int i = 0; i < 4; ++i) {
    double v = current[i] + alpha * (commanded[i] - current[i]);
    out[i] = std::clamp(v, 0.0, params.motor_max_speed);
  }
  return out;
}

double mechanical_energy(const DroneState& s, const PhysicalParams& pp) {
  const double v2 = s.vx * s.vx + s.vy * s.vy + s.vz * s.vz;
  const double rot = pp.inertia_xx * s.p * s.p + pp.inertia_yy * s.q * s.q +
                     pp.inertia_zz * s.r * s.r;
  return 0.5 * pp.mass * v2 + 0.5 * rot + pp.mass * pp.gravity * s.z;
}

}  // namespace evflight::sim
