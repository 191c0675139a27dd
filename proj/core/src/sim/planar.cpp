#include "evflight/sim/planar.hpp"

#include <stdexcept>

namespace evflight::sim {

namespace {

constexpr double kHalfPi = kPi / 2.0;

void check_roll(double roll) {
  if (!(std::abs(roll) < kHalfPi))
    throw std::domain_error("planar model: |roll| reached pi/2");
}

}  // namespace

PlanarState step_planar_model(const PlanarState& x, double p, double dt) {
  if (!(dt > 0.0 && dt <= 0.01))
    throw std::domain_error("planar model: dt outside (0, 0.01]");
  check_roll(x.roll);

  // RK4 on [vy, roll]; z is constant by model definition. roll' = p is
  // exact, so the stage rolls are known in closed form.
  auto f_vy = [](double roll) { return kGravity * std::tan(roll); };
  const double r1 = x.roll;
  const double r2 = x.roll + 0.5 * dt * p;
  const double r4 = x.roll + dt * p;
  check_roll(r4);
  const double k1 = f_vy(r1);
  const double k2 = f_vy(r2);
  const double k3 = k2;  // same stage roll at midpoint
  const double k4 = f_vy(r4);

  PlanarState out;
  out.vy = x.vy + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  out.roll = r4;
  out.z = x.z;
  return out;
}

ExtendedState step_extended_model(const ExtendedState& x, double moment,
                                  const PhysicalParams& params, double dt) {
  if (!(dt > 0.0 && dt <= 0.01))
    throw std::domain_error("extended model: dt outside (0, 0.01]");
  check_roll(x.roll);

  const double pdot = moment / params.inertia_xx;
  struct S { double vy, roll, p; };
  auto deriv = [&](const S& s) {
    return S{kGravity * std::tan(s.roll), s.p, pdot};
  };
  auto add = [](const S& a, const S& b, double h) {
    return S{a.vy + h * b.vy, a.roll + h * b.roll, a.p + h * b.p};
  };

  const S s0{x.vy, x.roll, x.p};
  const S k1 = deriv(s0);
  const S k2 = deriv(add(s0, k1, dt / 2));
  const S k3 = deriv(add(s0, k2, dt / 2));
  const S k4 = deriv(add(s0, k3, dt));

  ExtendedState out;
  out.vy = x.vy + dt / 6.0 * (k1.vy + 2 * k2.vy + 2 * k3.vy + k4.vy);
  out.roll = x.roll + dt / 6.0 * (k1.roll + 2 * k2.roll + 2 * k3.roll + k4.roll);
  out.p = x.p + dt * pdot;
  out.z = x.z;
  check_roll(out.roll);
  return out;
}

double ventral_flow(double vy, double roll, double z, double p) {
  if (!(z > 0.0)) throw std::domain_error("ventral_flow: z <= 0");
  check_roll(roll);
  const double c = std::cos(roll);
  return -c * c * vy / z + p;
}

double ventral_flow(const PlanarState& x, double p) {
  return ventral_flow(x.vy, x.roll, x.z, p);
}

}  // namespace evflight::sim
