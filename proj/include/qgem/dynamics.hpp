#pragma once

#include <iosfwd>
#include <vector>

#include "qgem/types.hpp"

// Time-stepping propagation of an arm toward the plate and the
// superposition-width schedule. The integrator is the
// constant-acceleration-per-step scheme
//   z(t+dt) = z(t) - a dt^2/2 - v dt,   v(t+dt) = v(t) + a dt,
// which reproduces the published trajectories; a dt-halving convergence
// check stands in for an error estimate.

namespace qgem::dynamics {

struct ForceFlags {
  bool casimir = true;
  bool dipole = true;
};

/// One propagated arm. Samples are spaced by dt starting at t = 0 with
/// z = d, v = 0, dx = 0. If `collided` is set the record ends at the step
/// where z dropped to the sphere radius and `collision_time` holds the time
/// of impact.
struct TrajectoryRecord {
  std::vector<GeometryState> samples;
  double dt = 0.0;
  double closest_approach_z = 0.0;
  bool collided = false;
  double collision_time = 0.0;

  const GeometryState& back() const { return samples.back(); }
  double final_z() const { return samples.back().z; }
};

/// Superposition width at time t under the three-step schedule: parabolic
/// opening for t in [0, tau_a], constant dx_max = (g mu_B dB / 2m) tau_a^2
/// during the hold, mirrored parabolic closing, exactly zero at 2 tau_a + tau.
double superposition_width(double t, const ProtocolSchedule& schedule, double mass);

/// Maximum width reached at the end of the opening step.
double max_superposition_width(const ProtocolSchedule& schedule, double mass);

/// One constant-acceleration step toward the plate. dx is left untouched;
/// the schedule owns it.
GeometryState step(const GeometryState& state, double accel_toward_plate, double dt);

/// Propagates a single arm from z(0) = z0 over the full schedule under the
/// selected plate forces. Collision (z <= radius) stops the run and flags
/// the record; it does not throw.
TrajectoryRecord propagate_from(double z0, const TestMassSpec& spec, const ProtocolSchedule& schedule,
                                double dt, ForceFlags flags = {});

/// Propagates from the configured initial distance, with the configured
/// dipole angle.
TrajectoryRecord propagate(const ExperimentConfig& config, double dt, ForceFlags flags = {});

/// CSV export, columns t_s,z_m,v_mps,dx_m.
void write_csv(std::ostream& os, const TrajectoryRecord& record);

}  // namespace qgem::dynamics
