#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgem/constants.hpp"
#include "qgem/types.hpp"

// Closed-form electromagnetic interactions between the dielectric test
// masses, their images, and the grounded conducting plate. Both plate laws
// are attractive; forces are returned as positive magnitudes directed toward
// the plate, the dynamics module owns the geometry sign.

namespace qgem::forces {

/// Casimir-Polder potential between two neutral dielectric spheres a
/// distance `separation` apart (center to center):
///   V = -(23 hbar c / 4 pi) (R^6 / d^7) ((eps-1)/(eps+2))^2.
inline double casimir_sphere_sphere_potential(const TestMassSpec& spec, double separation) {
  const double r = spec.radius();
  if (!(separation > 2.0 * r))
    throw std::domain_error("sphere-sphere separation must exceed one diameter");
  const double chi = spec.susceptibility_ratio();
  const double r3 = 3.0 * spec.mass / (4.0 * std::numbers::pi * spec.density);  // R^3
  const double d = separation;
  const double d7 = d * d * d * d * d * d * d;
  return -(23.0 * constants::hbar * constants::c / (4.0 * std::numbers::pi)) * (r3 * r3 / d7) *
         chi * chi;
}

/// Smallest mass separation at which gravity stays an order of magnitude
/// above the sphere-sphere Casimir-Polder potential:
///   d_min = [ (230/4pi)(hbar c/G) (3/(4 pi rho) (eps-1)/(eps+2))^2 ]^(1/6).
/// Mass-independent.
inline double minimal_distance(double density, double epsilon) {
  if (!(density > 0.0)) throw std::domain_error("density must be positive");
  if (!(epsilon > 1.0)) throw std::domain_error("epsilon must exceed 1");
  const double chi = (epsilon - 1.0) / (epsilon + 2.0);
  const double geom = 3.0 / (4.0 * std::numbers::pi * density) * chi;
  const double arg = (230.0 / (4.0 * std::numbers::pi)) * (constants::hbar * constants::c / constants::G) *
                     geom * geom;
  return std::pow(arg, 1.0 / 6.0);
}

/// Casimir-Polder potential between a dielectric sphere and a perfectly
/// reflective plate, V = -3 hbar c alpha / (8 pi z^4) with the static
/// polarizability alpha = R^3 (eps-1)/(eps+2). Valid for z much larger than
/// the relevant EM wavelengths; not checked at runtime.
inline double casimir_plate_potential(const TestMassSpec& spec, double z) {
  if (!(z > 0.0)) throw std::domain_error("plate separation must be positive");
  const double alpha = 3.0 * spec.mass / (4.0 * std::numbers::pi * spec.density) * spec.susceptibility_ratio();
  const double z4 = z * z * z * z;
  return -3.0 * constants::hbar * constants::c * alpha / (8.0 * std::numbers::pi * z4);
}

/// Casimir force magnitude on a sphere a distance z from the plate face,
///   F = (3 hbar c / 2 pi) ((eps-1)/(eps+2)) (3 m / 4 pi rho) z^-5.
inline double casimir_plate_force(const TestMassSpec& spec, double z) {
  if (!(z > spec.radius())) throw std::domain_error("sphere touches the plate (z <= radius)");
  const double r3 = 3.0 * spec.mass / (4.0 * std::numbers::pi * spec.density);
  const double z4 = z * z * z * z;
  return (3.0 * constants::hbar * constants::c / (2.0 * std::numbers::pi)) *
         spec.susceptibility_ratio() * r3 / (z4 * z);
}

/// Image-dipole interaction potential of a point dipole p at distance z from
/// the grounded plate, V = -(1/4 pi eps0) (p^2 / 16 z^3) (1 + cos^2 theta).
/// Includes the 1/2 factor for the induced image.
inline double dipole_plate_potential(double p, double theta, double z) {
  if (!(z > 0.0)) throw std::domain_error("plate separation must be positive");
  const double ct = std::cos(theta);
  return -(p * p * (1.0 + ct * ct)) / (4.0 * std::numbers::pi * constants::eps0 * 16.0 * z * z * z);
}

/// Attractive force magnitude between dipole and plate,
///   F = (1/4 pi eps0) (3 p^2 / 16 z^4) (1 + cos^2 theta).
inline double dipole_plate_force(double p, double theta, double z) {
  if (!(z > 0.0)) throw std::domain_error("plate separation must be positive");
  const double ct = std::cos(theta);
  const double z4 = z * z * z * z;
  return (3.0 * p * p * (1.0 + ct * ct)) / (4.0 * std::numbers::pi * constants::eps0 * 16.0 * z4);
}

/// Dipole moment induced in the dielectric sphere by an external field E0,
///   p_e = 4 pi eps0 ((eps-1)/(eps+2)) R^3 E0.
inline double induced_dipole(const TestMassSpec& spec, double field_e0) {
  if (field_e0 < 0.0) throw std::domain_error("external field must be non-negative");
  const double r3 = 3.0 * spec.mass / (4.0 * std::numbers::pi * spec.density);
  return 4.0 * std::numbers::pi * constants::eps0 * spec.susceptibility_ratio() * r3 * field_e0;
}

/// Both plate-law contributions at a given separation.
struct ForceEvaluation {
  double casimir_n = 0.0;  // N, toward plate
  double dipole_n = 0.0;   // N, toward plate
  double total_n = 0.0;    // N, casimir_n + dipole_n exactly
  double z_at = 0.0;       // m
};

inline ForceEvaluation evaluate_plate_forces(const TestMassSpec& spec, double z,
                                             bool include_casimir = true,
                                             bool include_dipole = true) {
  ForceEvaluation out;
  out.z_at = z;
  if (include_casimir) out.casimir_n = casimir_plate_force(spec, z);
  if (include_dipole)
    out.dipole_n = dipole_plate_force(spec.dipole_moment, spec.dipole_angle_theta, z);
  out.total_n = out.casimir_n + out.dipole_n;
  return out;
}

}  // namespace qgem::forces
