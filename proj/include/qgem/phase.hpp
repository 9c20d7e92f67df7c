#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "qgem/dynamics.hpp"
#include "qgem/types.hpp"

// Entanglement-phase and dephasing accumulation along propagated
// trajectories, plus the static closed forms for both configurations.
// Per-step contributions use left-endpoint evaluation, mirroring the
// integrator's stepping; the dt-halving convergence check bounds the error.

namespace qgem::phase {

enum class Configuration { parallel, linear };

/// Closed-form effective entanglement phase for a fixed geometry held for
/// time tau:
///   parallel: Phi = 2 (G m^2 tau / hbar) (1/sqrt(d^2+dx^2) - 1/d)
///   linear:   Phi =   (G m^2 tau / hbar) (1/(d+dx) + 1/(d-dx) - 2/d)
/// The parallel phase is <= 0; consumers use |Phi|.
double static_effective_phase(double mass, double d, double dx, double tau, Configuration config);

struct PhaseResult {
  double phi_eff_accumulated = 0.0;  // rad, <= 0 in the parallel configuration
  double global_phase = 0.0;         // rad, informational
  double dephasing_casimir = 0.0;    // rad
  double dephasing_dipole = 0.0;     // rad
  double closest_approach_z = 0.0;   // m
};

/// Integrates the per-step effective phase over a full (non-collided)
/// trajectory with mass separation s(t) = 2 z(t) + W and the instantaneous
/// superposition width, covering opening, hold and closing.
PhaseResult accumulated_phase(const dynamics::TrajectoryRecord& traj, double plate_w, double mass);

/// Dephasing phases from the arm-asymmetric plate interactions, integrating
///   gamma_d^C = (3 c R^3 / 8 pi)((eps-1)/(eps+2)) [z0^-4 - z1^-4]
///   gamma_d^D = (p^2 / 16 pi eps0 hbar)           [z0^-3 - z1^-3]
/// over two independently propagated arms (near = |0>, far = |1>).
/// Returns (phi_d_casimir, phi_d_dipole).
std::pair<double, double> dephasing_accumulation(const dynamics::TrajectoryRecord& arm_near,
                                                 const dynamics::TrajectoryRecord& arm_far,
                                                 const TestMassSpec& spec);

/// Effective phase of a tilted run where each mass has one arm on the near
/// trajectory and one on the far one; the tilt mode decides the pairing
/// across the plate. Dephasing fields are filled from the same two arms.
PhaseResult accumulated_phase_tilted(const dynamics::TrajectoryRecord& arm_near,
                                     const dynamics::TrajectoryRecord& arm_far, double plate_w,
                                     const TestMassSpec& spec, TiltMode mode);

struct PhaseSeriesPoint {
  double t = 0.0;
  double phi = 0.0;         // cumulative effective phase
  double dephase_c = 0.0;   // cumulative Casimir dephasing
  double dephase_d = 0.0;   // cumulative dipole dephasing
};

/// Cumulative phase series for export; dephasing columns are zero for a
/// single (untilted) trajectory.
std::vector<PhaseSeriesPoint> phase_series(const dynamics::TrajectoryRecord& traj, double plate_w,
                                           double mass);

/// Cumulative series for a tilted pair of arms.
std::vector<PhaseSeriesPoint> phase_series_tilted(const dynamics::TrajectoryRecord& arm_near,
                                                  const dynamics::TrajectoryRecord& arm_far,
                                                  double plate_w, const TestMassSpec& spec,
                                                  TiltMode mode);

/// CSV export, columns t_s,phi_rad,dephase_C_rad,dephase_D_rad.
void write_csv(std::ostream& os, const std::vector<PhaseSeriesPoint>& series);

}  // namespace qgem::phase
