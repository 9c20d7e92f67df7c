#include "qgem/dynamics.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qgem/csv.hpp"
#include "qgem/forces.hpp"

namespace qgem::dynamics {

double max_superposition_width(const ProtocolSchedule& schedule, double mass) {
  const double k = constants::g_factor * constants::mu_B * schedule.db_dz / (2.0 * mass);
  return k * schedule.tau_a * schedule.tau_a;
}

double superposition_width(double t, const ProtocolSchedule& schedule, double mass) {
  const double total = schedule.total_time();
  if (t < 0.0 || t > total) throw std::out_of_range("time outside protocol schedule");
  const double k = constants::g_factor * constants::mu_B * schedule.db_dz / (2.0 * mass);
  const double dx_max = k * schedule.tau_a * schedule.tau_a;
  if (t <= schedule.tau_a) return k * t * t;
  if (t <= schedule.tau_a + schedule.tau) return dx_max;
  const double u = t - schedule.tau_a - schedule.tau;
  if (u >= schedule.tau_a) return 0.0;  // exact closure at 2 tau_a + tau
  return dx_max - k * u * u;
}

GeometryState step(const GeometryState& state, double accel_toward_plate, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  GeometryState next;
  next.t = state.t + dt;
  next.z = state.z - 0.5 * accel_toward_plate * dt * dt - state.v * dt;
  next.v = state.v + accel_toward_plate * dt;
  next.dx = state.dx;
  return next;
}

TrajectoryRecord propagate_from(double z0, const TestMassSpec& spec, const ProtocolSchedule& schedule,
                                double dt, ForceFlags flags) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  spec.validate();
  schedule.validate();

  const double total = schedule.total_time();
  const auto n_steps = static_cast<std::size_t>(std::llround(total / dt));
  const double radius = spec.radius();

  // Hoisted force-law prefactors; the inner loop only touches powers of z.
  const double r3 = 3.0 * spec.mass / (4.0 * std::numbers::pi * spec.density);
  const double cas_coeff = flags.casimir
                               ? (3.0 * constants::hbar * constants::c / (2.0 * std::numbers::pi)) *
                                     spec.susceptibility_ratio() * r3 / spec.mass
                               : 0.0;
  const double ct = std::cos(spec.dipole_angle_theta);
  const double dip_coeff = flags.dipole
                               ? (3.0 * spec.dipole_moment * spec.dipole_moment * (1.0 + ct * ct)) /
                                     (4.0 * std::numbers::pi * constants::eps0 * 16.0 * spec.mass)
                               : 0.0;

  TrajectoryRecord record;
  record.dt = dt;
  record.samples.reserve(n_steps + 1);

  GeometryState state;
  state.z = z0;
  record.samples.push_back(state);
  record.closest_approach_z = z0;

  if (!(z0 > radius)) {
    record.collided = true;
    record.collision_time = 0.0;
    return record;
  }

  double z = z0;
  double v = 0.0;
  for (std::size_t i = 0; i < n_steps; ++i) {
    const double z2 = z * z;
    const double z4 = z2 * z2;
    const double accel = cas_coeff / (z4 * z) + dip_coeff / z4;
    const double t_next = static_cast<double>(i + 1) * dt;
    z = z - 0.5 * accel * dt * dt - v * dt;
    v = v + accel * dt;
    if (!(z > radius)) {
      record.collided = true;
      record.collision_time = t_next;
      record.closest_approach_z = z;
      return record;
    }
    GeometryState next;
    next.t = t_next;
    next.z = z;
    next.v = v;
    next.dx = superposition_width(std::min(t_next, total), schedule, spec.mass);
    record.samples.push_back(next);
    if (z < record.closest_approach_z) record.closest_approach_z = z;
  }
  return record;
}

TrajectoryRecord propagate(const ExperimentConfig& config, double dt, ForceFlags flags) {
  return propagate_from(config.schedule.initial_distance, config.test_mass, config.schedule, dt, flags);
}

void write_csv(std::ostream& os, const TrajectoryRecord& record) {
  os << "t_s,z_m,v_mps,dx_m\n";
  for (const auto& s : record.samples) {
    os << csv::field(s.t) << ',' << csv::field(s.z) << ',' << csv::field(s.v) << ','
       << csv::field(s.dx) << '\n';
  }
}

}  // namespace qgem::dynamics
