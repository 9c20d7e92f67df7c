#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qgem/types.hpp"

// Deterministic sweeps and Monte-Carlo sampling over initial-condition
// imbalances. Sweep points and samples are embarrassingly parallel; results
// are aggregated by index so the output is independent of scheduling.

namespace qgem::sensitivity {

enum class Axis { delta_d1, delta_d2, delta_dB, delta_theta };

const char* axis_name(Axis axis);

struct SweepPoint {
  double value = 0.0;             // imbalance on the swept axis
  double phi_low = 0.0;           // rad, |Phi| band lower edge
  double phi_high = 0.0;          // rad, |Phi| band upper edge
  double dephase_casimir = 0.0;   // rad, delta_d2 axis only
  double dephase_dipole = 0.0;    // rad, delta_d2 axis only
  bool collided = false;
};

struct SweepResult {
  Axis axis = Axis::delta_d1;
  std::vector<SweepPoint> points;
  double phi_unperturbed = 0.0;   // rad, |Phi| at zero imbalance
  double tolerance_bound = 0.0;   // largest imbalance with deviation <= threshold
  double threshold = 0.12;
};

/// Sweeps one imbalance axis over [lo, hi]. Each point propagates the
/// perturbed configuration(s) and records the |Phi| band (for delta_d2 the
/// envelope over both tilt modes, plus the dephasing phases). The tolerance
/// bound is bisected to three significant figures on
/// max |delta Phi| / |Phi| = threshold; collided points are flagged and
/// excluded from the bisection domain.
SweepResult sweep(const ExperimentConfig& config, Axis axis, double lo, double hi, int n_points,
                  double threshold = 0.12, double dt = 1e-5);

struct AxisSigmas {
  double d1 = 0.0;     // m
  double d2 = 0.0;     // m
  double dB = 0.0;     // T/m
  double theta = 0.0;  // rad
};

struct MonteCarloResult {
  std::uint64_t seed = 0;
  std::size_t n_samples = 0;          // requested draws
  std::vector<double> phase_samples;  // |Phi| per surviving sample, in sample order
  std::size_t n_failed = 0;           // collided draws, excluded
  double mean = 0.0;
  double std_dev = 0.0;
  double std_of_mean = 0.0;           // std_dev / sqrt(n_samples)
};

/// Draws independent Gaussian offsets per axis per sample (counter-based
/// stream keyed by seed; identical seeds reproduce identical results
/// bit-exactly), propagates each perturbed run and reports the |Phi|
/// distribution.
MonteCarloResult monte_carlo(const ExperimentConfig& config, const AxisSigmas& sigmas,
                             std::size_t n_samples, std::uint64_t seed, double dt = 1e-5);

/// Worker cap from QGEM_THREADS (defaults to hardware concurrency).
unsigned worker_limit();

/// CSV export, columns imbalance,phi_low_rad,phi_high_rad,dephase_C_rad,dephase_D_rad,collided.
void write_csv(std::ostream& os, const SweepResult& result);

}  // namespace qgem::sensitivity
