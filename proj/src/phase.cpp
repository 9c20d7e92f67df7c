#include "qgem/phase.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qgem/csv.hpp"

namespace qgem::phase {

namespace {

void require_usable(const dynamics::TrajectoryRecord& traj) {
  if (traj.collided) throw std::invalid_argument("trajectory collided with the plate");
  if (traj.samples.size() < 2) throw std::invalid_argument("trajectory has no steps");
}

void require_pair(const dynamics::TrajectoryRecord& a, const dynamics::TrajectoryRecord& b) {
  require_usable(a);
  require_usable(b);
  if (a.dt != b.dt) throw std::invalid_argument("arm trajectories have mismatched dt");
  if (a.samples.size() != b.samples.size())
    throw std::invalid_argument("arm trajectories have mismatched length");
}

struct DephasingCoefficients {
  double casimir;  // 3 c R^3 chi / 8 pi
  double dipole;   // p^2 / 16 pi eps0 hbar
};

DephasingCoefficients dephasing_coefficients(const TestMassSpec& spec) {
  const double r3 = 3.0 * spec.mass / (4.0 * std::numbers::pi * spec.density);
  return {3.0 * constants::c * r3 * spec.susceptibility_ratio() / (8.0 * std::numbers::pi),
          spec.dipole_moment * spec.dipole_moment /
              (16.0 * std::numbers::pi * constants::eps0 * constants::hbar)};
}

inline double inv4(double z) {
  const double z2 = z * z;
  return 1.0 / (z2 * z2);
}

inline double inv3(double z) { return 1.0 / (z * z * z); }

}  // namespace

double static_effective_phase(double mass, double d, double dx, double tau, Configuration config) {
  const double scale = constants::G * mass * mass * tau / constants::hbar;
  switch (config) {
    case Configuration::parallel:
      if (!(d > 0.0)) throw std::domain_error("separation must be positive");
      return 2.0 * scale * (1.0 / std::sqrt(d * d + dx * dx) - 1.0 / d);
    case Configuration::linear:
      if (!(d > dx)) throw std::domain_error("linear configuration requires d > dx");
      return scale * (1.0 / (d + dx) + 1.0 / (d - dx) - 2.0 / d);
  }
  throw std::logic_error("unknown configuration");
}

PhaseResult accumulated_phase(const dynamics::TrajectoryRecord& traj, double plate_w, double mass) {
  require_usable(traj);
  const double k = 2.0 * constants::G * mass * mass * traj.dt / constants::hbar;
  const double kg = constants::G * mass * mass * traj.dt / constants::hbar;
  double phi = 0.0;
  double global = 0.0;
  for (std::size_t i = 0; i + 1 < traj.samples.size(); ++i) {
    const auto& s = traj.samples[i];
    const double sep = 2.0 * s.z + plate_w;
    phi += k * (1.0 / std::sqrt(sep * sep + s.dx * s.dx) - 1.0 / sep);
    global += kg / sep;
  }
  PhaseResult out;
  out.phi_eff_accumulated = phi;
  out.global_phase = global;
  out.closest_approach_z = traj.closest_approach_z;
  return out;
}

std::pair<double, double> dephasing_accumulation(const dynamics::TrajectoryRecord& arm_near,
                                                 const dynamics::TrajectoryRecord& arm_far,
                                                 const TestMassSpec& spec) {
  require_pair(arm_near, arm_far);
  const auto coeff = dephasing_coefficients(spec);
  const double dt = arm_near.dt;
  double phi_c = 0.0;
  double phi_d = 0.0;
  for (std::size_t i = 0; i + 1 < arm_near.samples.size(); ++i) {
    const double z0 = arm_near.samples[i].z;
    const double z1 = arm_far.samples[i].z;
    phi_c += coeff.casimir * (inv4(z0) - inv4(z1)) * dt;
    phi_d += coeff.dipole * (inv3(z0) - inv3(z1)) * dt;
  }
  return {phi_c, phi_d};
}

PhaseResult accumulated_phase_tilted(const dynamics::TrajectoryRecord& arm_near,
                                     const dynamics::TrajectoryRecord& arm_far, double plate_w,
                                     const TestMassSpec& spec, TiltMode mode) {
  require_pair(arm_near, arm_far);
  const double mass = spec.mass;
  const double k = constants::G * mass * mass * arm_near.dt / constants::hbar;
  double phi = 0.0;
  double global = 0.0;
  double closest = arm_near.closest_approach_z;
  for (std::size_t i = 0; i + 1 < arm_near.samples.size(); ++i) {
    const double zn = arm_near.samples[i].z;
    const double zf = arm_far.samples[i].z;
    const double dx = arm_near.samples[i].dx;
    const double s_mixed = zn + zf + plate_w;  // one arm from each trajectory
    const double s_near = 2.0 * zn + plate_w;
    const double s_far = 2.0 * zf + plate_w;
    if (mode == TiltMode::symmetric) {
      // |0>|0> and |1>|1> pairs sit at the mixed separation; the diagonal
      // pairs connect equal-height arms across the plate.
      phi += k * (1.0 / std::sqrt(s_near * s_near + dx * dx) +
                  1.0 / std::sqrt(s_far * s_far + dx * dx) - 2.0 / s_mixed);
      global += k / s_mixed;
    } else {
      phi += k * (2.0 / std::sqrt(s_mixed * s_mixed + dx * dx) - 1.0 / s_near - 1.0 / s_far);
      global += 0.5 * k * (1.0 / s_near + 1.0 / s_far);
    }
  }
  PhaseResult out;
  out.phi_eff_accumulated = phi;
  out.global_phase = global;
  out.closest_approach_z = closest;
  auto [pc, pd] = dephasing_accumulation(arm_near, arm_far, spec);
  out.dephasing_casimir = pc;
  out.dephasing_dipole = pd;
  return out;
}

std::vector<PhaseSeriesPoint> phase_series(const dynamics::TrajectoryRecord& traj, double plate_w,
                                           double mass) {
  require_usable(traj);
  const double k = 2.0 * constants::G * mass * mass * traj.dt / constants::hbar;
  std::vector<PhaseSeriesPoint> out;
  out.reserve(traj.samples.size());
  double phi = 0.0;
  out.push_back({0.0, 0.0, 0.0, 0.0});
  for (std::size_t i = 0; i + 1 < traj.samples.size(); ++i) {
    const auto& s = traj.samples[i];
    const double sep = 2.0 * s.z + plate_w;
    phi += k * (1.0 / std::sqrt(sep * sep + s.dx * s.dx) - 1.0 / sep);
    out.push_back({traj.samples[i + 1].t, phi, 0.0, 0.0});
  }
  return out;
}

std::vector<PhaseSeriesPoint> phase_series_tilted(const dynamics::TrajectoryRecord& arm_near,
                                                  const dynamics::TrajectoryRecord& arm_far,
                                                  double plate_w, const TestMassSpec& spec,
                                                  TiltMode mode) {
  require_pair(arm_near, arm_far);
  const auto coeff = dephasing_coefficients(spec);
  const double mass = spec.mass;
  const double dt = arm_near.dt;
  const double k = constants::G * mass * mass * dt / constants::hbar;
  std::vector<PhaseSeriesPoint> out;
  out.reserve(arm_near.samples.size());
  double phi = 0.0;
  double phi_c = 0.0;
  double phi_d = 0.0;
  out.push_back({0.0, 0.0, 0.0, 0.0});
  for (std::size_t i = 0; i + 1 < arm_near.samples.size(); ++i) {
    const double zn = arm_near.samples[i].z;
    const double zf = arm_far.samples[i].z;
    const double dx = arm_near.samples[i].dx;
    const double s_mixed = zn + zf + plate_w;
    const double s_near = 2.0 * zn + plate_w;
    const double s_far = 2.0 * zf + plate_w;
    if (mode == TiltMode::symmetric) {
      phi += k * (1.0 / std::sqrt(s_near * s_near + dx * dx) +
                  1.0 / std::sqrt(s_far * s_far + dx * dx) - 2.0 / s_mixed);
    } else {
      phi += k * (2.0 / std::sqrt(s_mixed * s_mixed + dx * dx) - 1.0 / s_near - 1.0 / s_far);
    }
    phi_c += coeff.casimir * (inv4(zn) - inv4(zf)) * dt;
    phi_d += coeff.dipole * (inv3(zn) - inv3(zf)) * dt;
    out.push_back({arm_near.samples[i + 1].t, phi, phi_c, phi_d});
  }
  return out;
}

void write_csv(std::ostream& os, const std::vector<PhaseSeriesPoint>& series) {
  os << "t_s,phi_rad,dephase_C_rad,dephase_D_rad\n";
  for (const auto& p : series) {
    os << csv::field(p.t) << ',' << csv::field(p.phi) << ',' << csv::field(p.dephase_c) << ','
       << csv::field(p.dephase_d) << '\n';
  }
}

}  // namespace qgem::phase
