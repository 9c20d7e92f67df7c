#pragma once

#include <iosfwd>
#include <vector>

#include "qgem/types.hpp"

// Mechanical response of the clamped conducting plate: static deflection
// under imbalance-driven point forces, vibrational mode frequencies, thermal
// RMS amplitude, and the resulting residual dephasing budget. The point-force
// approximation is used throughout (superposition width << plate side).

namespace qgem::plate {

/// Static deflection a distance `a` from the plate midpoint under a point
/// force F at the center, clamped at both ends:
///   dz = F (L - 2|a|)^2 (L + 4|a|) / (192 E I),  I = W^3 L / 12.
/// Even in a; zero at the clamped edge |a| = L/2.
double deflection(double force, double a, const PlateSpec& plate);

struct DeflectionProfile {
  std::vector<double> a_values;    // m, from plate midpoint
  std::vector<double> deflection;  // m
  double f_max = 0.0;              // N, driving point force
  double max_deflection = 0.0;     // m, at a = 0
};

/// Deflection sampled over a in [-L/2, L/2].
DeflectionProfile deflection_profile(double force, const PlateSpec& plate, int n_points = 201);

/// Net point force on the plate at the end of the run from one imbalance
/// (exactly one of delta_d1, delta_theta may be nonzero): both perturbed
/// configurations are propagated to 2 tau_a + tau and the plate-force
/// difference at their closest approaches is returned.
double net_imbalance_force(const ExperimentConfig& config, const ImbalanceSpec& imbalance,
                           double dt = 1e-5);

/// Resonance frequency of a clamped square plate,
///   omega_nm = (K_nm / L^2) sqrt(E W^2 / (12 (1 - mu^2) rho)).
/// Only the (1,2) coefficient is tabulated (K_12, from the plate spec).
double clamped_plate_frequency(int n, int m, const PlateSpec& plate);

/// Natural frequency of a stressed membrane,
///   omega_nm = (1/2) sqrt((sigma / rho) (n^2 + m^2) / L^2).
double membrane_frequency(int n, int m, double sigma, const PlateSpec& plate);

/// Thermal RMS amplitude from equipartition, sqrt(k_B T / (M omega^2)) with
/// M = rho W L^2.
double thermal_rms(const PlateSpec& plate, double omega);

struct ThermalPlateReport {
  double omega_12 = 0.0;            // rad/s
  double rms_amplitude = 0.0;       // m
  double geometric_factor = 0.0;    // dx_max / L
  double time_suppression = 0.0;    // 2 pi / (omega T_total)
  double effective_delta_d2 = 0.0;  // m, product of the three above
  double dephasing_phi_d = 0.0;     // rad, via the phase module's linear response
};

/// Assembles the thermal-mode dephasing budget for the configured run.
ThermalPlateReport thermal_dephasing_budget(const ExperimentConfig& config, const PlateSpec& plate,
                                            double dt = 1e-5);

/// CSV export, columns a_m,deflection_m.
void write_csv(std::ostream& os, const DeflectionProfile& profile);

}  // namespace qgem::plate
