#include "qgem/plate.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "qgem/csv.hpp"
#include "qgem/dynamics.hpp"
#include "qgem/forces.hpp"
#include "qgem/phase.hpp"

namespace qgem::plate {

double deflection(double force, double a, const PlateSpec& plate) {
  if (force < 0.0) throw std::domain_error("force must be non-negative");
  const double half = plate.side_length / 2.0;
  const double aa = std::fabs(a);
  if (aa > half) throw std::out_of_range("position outside the plate, |a| > L/2");
  const double l = plate.side_length;
  const double lm = l - 2.0 * aa;
  return force * lm * lm * (l + 4.0 * aa) / (192.0 * plate.youngs_modulus * plate.area_moment());
}

DeflectionProfile deflection_profile(double force, const PlateSpec& plate, int n_points) {
  if (n_points < 2) throw std::invalid_argument("profile needs at least two points");
  DeflectionProfile out;
  out.f_max = force;
  out.a_values.reserve(n_points);
  out.deflection.reserve(n_points);
  const double half = plate.side_length / 2.0;
  for (int i = 0; i < n_points; ++i) {
    const double a = -half + plate.side_length * static_cast<double>(i) / (n_points - 1);
    out.a_values.push_back(a);
    out.deflection.push_back(deflection(force, a, plate));
  }
  out.max_deflection = deflection(force, 0.0, plate);
  return out;
}

double net_imbalance_force(const ExperimentConfig& config, const ImbalanceSpec& imbalance,
                           double dt) {
  const bool has_d1 = imbalance.delta_d1 != 0.0;
  const bool has_theta = imbalance.delta_theta != 0.0;
  if (has_d1 == has_theta)
    throw std::invalid_argument("exactly one of delta_d1 and delta_theta must be nonzero");

  const auto& spec = config.test_mass;
  const auto& sched = config.schedule;

  TestMassSpec spec_a = spec;
  TestMassSpec spec_b = spec;
  double z0_a = sched.initial_distance;
  double z0_b = sched.initial_distance;
  if (has_d1) {
    z0_a += imbalance.delta_d1;
    z0_b -= imbalance.delta_d1;
  } else {
    spec_b.dipole_angle_theta = spec.dipole_angle_theta + imbalance.delta_theta;
  }

  const auto run_a = dynamics::propagate_from(z0_a, spec_a, sched, dt);
  const auto run_b = dynamics::propagate_from(z0_b, spec_b, sched, dt);
  if (run_a.collided || run_b.collided)
    throw CollisionError(run_a.collided ? run_a.collision_time : run_b.collision_time,
                         run_a.collided ? run_a.closest_approach_z : run_b.closest_approach_z);

  const auto f_a = forces::evaluate_plate_forces(spec_a, run_a.closest_approach_z);
  const auto f_b = forces::evaluate_plate_forces(spec_b, run_b.closest_approach_z);
  return std::fabs(f_b.total_n - f_a.total_n);
}

double clamped_plate_frequency(int n, int m, const PlateSpec& plate) {
  double k_nm = 0.0;
  if (n == 1 && m == 2) {
    k_nm = plate.mode_coefficient_k12;
  } else {
    throw std::invalid_argument("no mode coefficient tabulated for this (n, m)");
  }
  const double l2 = plate.side_length * plate.side_length;
  const double mu = plate.poisson_ratio;
  return (k_nm / l2) * std::sqrt(plate.youngs_modulus * plate.thickness_w * plate.thickness_w /
                                 (12.0 * (1.0 - mu * mu) * plate.density));
}

double membrane_frequency(int n, int m, double sigma, const PlateSpec& plate) {
  if (!(sigma > 0.0)) throw std::invalid_argument("biaxial stress must be positive");
  const double l2 = plate.side_length * plate.side_length;
  return 0.5 * std::sqrt(sigma / plate.density * (n * n + m * m) / l2);
}

double thermal_rms(const PlateSpec& plate, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  return std::sqrt(constants::k_B * plate.temperature / (plate.plate_mass() * omega * omega));
}

ThermalPlateReport thermal_dephasing_budget(const ExperimentConfig& config, const PlateSpec& plate,
                                            double dt) {
  ThermalPlateReport report;
  report.omega_12 = clamped_plate_frequency(1, 2, plate);
  report.rms_amplitude = thermal_rms(plate, report.omega_12);
  report.geometric_factor =
      dynamics::max_superposition_width(config.schedule, config.test_mass.mass) / plate.side_length;
  report.time_suppression =
      2.0 * std::numbers::pi / (report.omega_12 * config.schedule.total_time());
  report.effective_delta_d2 =
      report.rms_amplitude * report.geometric_factor * report.time_suppression;

  // Linear response of the dephasing to a small tilt, probed at 1 fm.
  const double probe = 1e-15;
  const double d = config.schedule.initial_distance;
  const auto arm_near = dynamics::propagate_from(d - probe, config.test_mass, config.schedule, dt);
  const auto arm_far = dynamics::propagate_from(d + probe, config.test_mass, config.schedule, dt);
  const auto [phi_c, phi_d] = phase::dephasing_accumulation(arm_near, arm_far, config.test_mass);
  report.dephasing_phi_d = (phi_c + phi_d) / probe * report.effective_delta_d2;
  return report;
}

void write_csv(std::ostream& os, const DeflectionProfile& profile) {
  os << "a_m,deflection_m\n";
  for (std::size_t i = 0; i < profile.a_values.size(); ++i) {
    os << csv::field(profile.a_values[i]) << ',' << csv::field(profile.deflection[i]) << '\n';
  }
}

}  // namespace qgem::plate
