#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "qgem/constants.hpp"

namespace qgem {

/// Raised for malformed configuration input (unknown keys, bad units, ...).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a test mass reaches the plate surface during propagation.
class CollisionError : public std::runtime_error {
 public:
  CollisionError(double time_s, double z_m)
      : std::runtime_error("test mass collided with plate at t = " + std::to_string(time_s) + " s"),
        time_of_impact(time_s),
        z_at_impact(z_m) {}
  double time_of_impact;
  double z_at_impact;
};

/// Dielectric test mass, assumed a perfect sphere. All SI.
struct TestMassSpec {
  double mass = 1e-14;              // kg
  double density = 3500.0;          // kg/m^3, diamond
  double epsilon = 5.1;             // relative dielectric constant
  double dipole_moment = convert_dipole_e_cm(1e-2);  // C m, p = p_i + p_e
  double dipole_angle_theta = 0.0;  // rad, dipole vs. mass-to-plate axis

  /// Sphere radius from mass and density, R = (3m / 4 pi rho)^(1/3).
  double radius() const { return std::cbrt(3.0 * mass / (4.0 * std::numbers::pi * density)); }

  /// (eps - 1) / (eps + 2), the dielectric response entering every force law.
  double susceptibility_ratio() const { return (epsilon - 1.0) / (epsilon + 2.0); }

  void validate() const {
    if (!(mass > 0.0)) throw ConfigError("mass must be positive");
    if (!(density > 0.0)) throw ConfigError("density must be positive");
    if (!(epsilon > 1.0)) throw ConfigError("epsilon must exceed 1");
    if (dipole_moment < 0.0) throw ConfigError("dipole_moment must be non-negative");
    if (dipole_angle_theta < 0.0 || dipole_angle_theta > std::numbers::pi)
      throw ConfigError("dipole_angle_theta must lie in [0, pi]");
  }
};

/// Clamped conducting plate (Silicon-Nitride defaults, thin gold coating
/// ignored mechanically).
struct PlateSpec {
  double thickness_w = 1e-6;        // m
  double side_length = 1e-3;        // m
  double youngs_modulus = 270e9;    // Pa
  double poisson_ratio = 0.2;       // dimensionless
  double density = 3100.0;          // kg/m^3
  double temperature = 1.0;         // K
  double mode_coefficient_k12 = 74.296;
  std::optional<double> biaxial_stress;  // Pa, membrane-limit frequency only

  /// Plate mass M = rho W L^2.
  double plate_mass() const { return density * thickness_w * side_length * side_length; }

  /// Area moment of inertia in the plate plane, I = W^3 L / 12.
  double area_moment() const {
    return thickness_w * thickness_w * thickness_w * side_length / 12.0;
  }

  void validate() const {
    if (!(thickness_w > 0.0 && side_length > 0.0)) throw ConfigError("plate dimensions must be positive");
    if (!(thickness_w < side_length)) throw ConfigError("plate thickness must be smaller than its side length");
    if (!(youngs_modulus > 0.0)) throw ConfigError("youngs_modulus must be positive");
    if (poisson_ratio < 0.0 || poisson_ratio >= 0.5) throw ConfigError("poisson_ratio must lie in [0, 0.5)");
    if (!(density > 0.0)) throw ConfigError("plate density must be positive");
    if (temperature < 0.0) throw ConfigError("temperature must be non-negative");
    if (!(mode_coefficient_k12 > 0.0)) throw ConfigError("mode_coefficient_k12 must be positive");
    if (biaxial_stress && !(*biaxial_stress > 0.0)) throw ConfigError("biaxial_stress must be positive when set");
  }
};

/// Timing and field-gradient schedule of one protocol run. The spatial
/// superposition opens during tau_a, holds for tau, and closes during a
/// final tau_a; total time is 2 tau_a + tau.
struct ProtocolSchedule {
  double tau_a = 0.25;              // s, acceleration / recombination
  double tau = 0.5;                 // s, free evolution
  double db_dz = 5e5;               // T/m, magnetic field gradient
  double initial_distance = 41e-6;  // m, z(0) = d for each arm
  double decoherence_gamma = 0.05;  // Hz, input parameter

  double total_time() const { return 2.0 * tau_a + tau; }

  void validate() const {
    if (tau_a < 0.0 || tau < 0.0) throw ConfigError("schedule durations must be non-negative");
    if (db_dz < 0.0) throw ConfigError("db_dz must be non-negative");
    if (initial_distance < 0.0) throw ConfigError("initial_distance must be non-negative");
    if (decoherence_gamma < 0.0) throw ConfigError("gamma must be non-negative");
  }
};

/// How a tilted superposition pairs the near/far arms of the two masses:
/// symmetric keeps the two superposition axes parallel, asymmetric mirrors
/// them.
enum class TiltMode { symmetric, asymmetric };

/// Run-to-run imbalances of the initial conditions. All default to zero.
struct ImbalanceSpec {
  double delta_d1 = 0.0;     // m, mass-to-plate placement offset
  double delta_d2 = 0.0;     // m, arm-to-arm tilt offset
  double delta_db = 0.0;     // T/m, gradient offset
  double delta_theta = 0.0;  // rad, dipole-angle offset
  TiltMode tilt_mode = TiltMode::symmetric;

  void validate() const {
    if (!std::isfinite(delta_d1) || !std::isfinite(delta_d2) || !std::isfinite(delta_db) ||
        !std::isfinite(delta_theta))
      throw ConfigError("imbalances must be finite");
  }
};

/// Instantaneous kinematic state of one arm: distance z to the plate face,
/// speed v toward the plate (>= 0 while approaching), and the current
/// superposition width dx.
struct GeometryState {
  double t = 0.0;   // s
  double z = 0.0;   // m
  double v = 0.0;   // m/s
  double dx = 0.0;  // m
};

/// Full parameterization of one protocol run.
struct ExperimentConfig {
  TestMassSpec test_mass;
  PlateSpec plate;
  ProtocolSchedule schedule;
  ImbalanceSpec imbalance;

  void validate() const {
    test_mass.validate();
    plate.validate();
    schedule.validate();
    imbalance.validate();
  }
};

}  // namespace qgem
