#pragma once

#include <stdexcept>

namespace qgem {

/// Fundamental constants, CODATA 2018, SI units throughout.
namespace constants {

/// G — Newtonian gravitational constant [m^3 kg^-1 s^-2].
inline constexpr double G = 6.67430e-11;

/// h — Planck constant [J s] (exact since the 2019 SI redefinition).
inline constexpr double h_planck = 6.62607015e-34;

/// hbar — reduced Planck constant [J s].
inline constexpr double hbar = 1.054571817e-34;

/// c — speed of light in vacuum [m/s] (exact).
inline constexpr double c = 299792458.0;

/// mu_B — Bohr magneton [J/T].
inline constexpr double mu_B = 9.2740100783e-24;

/// eps0 — vacuum permittivity [F/m].
inline constexpr double eps0 = 8.8541878128e-12;

/// k_B — Boltzmann constant [J/K] (exact).
inline constexpr double k_B = 1.380649e-23;

/// e — elementary charge [C] (exact).
inline constexpr double e_charge = 1.602176634e-19;

/// Electronic g-factor of the NV center spin, taken as 2.
inline constexpr double g_factor = 2.0;

}  // namespace constants

/// Aggregate view of the constant set used by a run. Values are fixed at
/// construction; the default is CODATA 2018.
struct PhysicalConstants {
  double G = constants::G;
  double hbar = constants::hbar;
  double c = constants::c;
  double mu_B = constants::mu_B;
  double eps0 = constants::eps0;
  double k_B = constants::k_B;
  double e_charge = constants::e_charge;
  double g_factor = constants::g_factor;

  void validate() const {
    const double vals[] = {G, hbar, c, mu_B, eps0, k_B, e_charge, g_factor};
    for (double v : vals) {
      if (!(v > 0.0)) throw std::invalid_argument("physical constants must be strictly positive");
    }
  }
};

/// Converts a dipole moment given in units of e*cm to SI [C m].
inline double convert_dipole_e_cm(double value_e_cm) {
  if (value_e_cm < 0.0) throw std::invalid_argument("dipole moment in e*cm must be non-negative");
  return value_e_cm * constants::e_charge * 1e-2;
}

}  // namespace qgem
