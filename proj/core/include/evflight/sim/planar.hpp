#pragma once

#include "evflight/sim/types.hpp"

namespace evflight::sim {

// Reduced roll-axis motion model: vy' = g tan(roll), roll' = p, z' = 0.
// Valid for |roll| < pi/2. Throws std::domain_error if the roll leaves the
// domain during the step or dt is outside (0, 0.01].
PlanarState step_planar_model(const PlanarState& x, double p, double dt);

// Moment-driven extension: adds p' = M / I_xx so no rate input is needed.
ExtendedState step_extended_model(const ExtendedState& x, double moment,
                                  const PhysicalParams& params, double dt);

// Ventral optical-flow component seen by a downward camera:
//   omega_y = -cos^2(roll) * vy / z + p.
// Throws std::domain_error on z <= 0.
double ventral_flow(const PlanarState& x, double p);
double ventral_flow(double vy, double roll, double z, double p);

}  // namespace evflight::sim
