#include "presets.hpp"

#include <numbers>

namespace qgem::presets {

namespace {

using sensitivity::Axis;

Preset base_preset(const std::string& name) {
  Preset p;
  p.name = name;
  p.config = reference_config();
  return p;
}

}  // namespace

ExperimentConfig reference_config() {
  ExperimentConfig c;
  c.test_mass.mass = 1e-14;
  c.test_mass.density = 3500.0;
  c.test_mass.epsilon = 5.1;
  c.test_mass.dipole_moment = convert_dipole_e_cm(1e-2);
  c.test_mass.dipole_angle_theta = 0.0;
  c.schedule.tau_a = 0.25;
  c.schedule.tau = 0.5;
  c.schedule.db_dz = 5e5;
  c.schedule.initial_distance = 41e-6;
  c.schedule.decoherence_gamma = 0.05;
  return c;
}

std::optional<Preset> find(const std::string& name) {
  if (name == "fig4") {
    auto p = base_preset(name);
    p.trajectories = {{"z0_20um", 20e-6, true, false},
                      {"z0_13um", 13e-6, true, false},
                      {"z0_10um", 10e-6, true, false}};
    return p;
  }
  if (name == "fig5") {
    auto p = base_preset(name);
    p.trajectories = {{"z0_100um", 100e-6, true, true},
                      {"z0_50um", 50e-6, true, true},
                      {"z0_41um", 41e-6, true, true}};
    return p;
  }
  if (name == "fig6") {
    auto p = base_preset(name);
    p.phase_runs = {{"m_1e-16", 1e-16, 5e3, 101e-6},
                    {"m_1e-15", 1e-15, 5e4, 64e-6},
                    {"m_1e-14", 1e-14, 5e5, 41e-6}};
    return p;
  }
  if (name == "fig8") {
    auto p = base_preset(name);
    p.sweeps = {{Axis::delta_d1, 0.0, 0.6e-6, 31, false},
                {Axis::delta_d2, 0.0, 0.6e-6, 31, false}};
    return p;
  }
  if (name == "fig9") {
    auto p = base_preset(name);
    DeflectionRun d1;
    d1.label = "delta_d1_0p48um";
    d1.imbalance.delta_d1 = 0.48e-6;
    DeflectionRun th;
    th.label = "delta_theta_0p17pi";
    th.imbalance.delta_theta = 0.17 * std::numbers::pi;
    p.deflections = {d1, th};
    return p;
  }
  if (name == "fig10") {
    auto p = base_preset(name);
    p.sweeps = {{Axis::delta_dB, 0.0, 5e4, 31, false}};
    return p;
  }
  if (name == "fig11") {
    auto p = base_preset(name);
    p.sweeps = {{Axis::delta_d2, 1e-18, 1e-13, 26, true}};
    return p;
  }
  if (name == "table1") {
    auto p = base_preset(name);
    p.table1 = true;
    return p;
  }
  if (name == "table2") {
    auto p = base_preset(name);
    p.table2 = true;
    p.sweeps = {{Axis::delta_d1, 0.0, 1.5e-6, 16, false},
                {Axis::delta_d2, 0.0, 1.5e-6, 16, false},
                {Axis::delta_dB, 0.0, 1e5, 16, false},
                {Axis::delta_theta, 0.0, std::numbers::pi / 2.0, 16, false}};
    return p;
  }
  return std::nullopt;
}

std::vector<std::string> names() {
  return {"fig4", "fig5", "fig6", "fig8", "fig9", "fig10", "fig11", "table1", "table2"};
}

double gradient_for_width(double mass, double dx_max, double tau_a) {
  return 2.0 * mass * dx_max / (constants::g_factor * constants::mu_B * tau_a * tau_a);
}

}  // namespace qgem::presets
