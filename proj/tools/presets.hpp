#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgem/sensitivity.hpp"
#include "qgem/types.hpp"

// Named presets reproducing the published figure and table data sets. Each
// preset fixes a base configuration plus the recipe its subcommand runs.

namespace qgem::presets {

struct TrajectoryRun {
  std::string label;
  double z0 = 0.0;  // m
  bool casimir = true;
  bool dipole = true;
};

struct PhaseRun {
  std::string label;
  double mass = 0.0;   // kg
  double db_dz = 0.0;  // T/m
  double z0 = 0.0;     // m
};

struct SweepPlan {
  sensitivity::Axis axis = sensitivity::Axis::delta_d1;
  double lo = 0.0;
  double hi = 0.0;
  int n_points = 41;
  bool log_spaced = false;
};

struct DeflectionRun {
  std::string label;
  ImbalanceSpec imbalance;
};

struct Preset {
  std::string name;
  ExperimentConfig config;
  std::vector<TrajectoryRun> trajectories;
  std::vector<PhaseRun> phase_runs;
  std::vector<SweepPlan> sweeps;
  std::vector<DeflectionRun> deflections;
  bool table1 = false;
  bool table2 = false;
  bool thermal = false;
};

/// Reference configuration: m = 1e-14 kg diamond, p = 1e-2 e cm, d = 41 um,
/// dB/dz = 5e5 T/m, 1 s protocol.
ExperimentConfig reference_config();

std::optional<Preset> find(const std::string& name);
std::vector<std::string> names();

}  // namespace qgem::presets
