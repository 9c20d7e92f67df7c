#include "qgem/config_io.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "qgem/csv.hpp"

namespace qgem::config_io {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double unit_scale(const std::string& suffix, const std::string& key) {
  if (suffix == "um") return 1e-6;
  if (suffix == "mm") return 1e-3;
  if (suffix == "fm") return 1e-15;
  if (suffix == "e_cm") return constants::e_charge * 1e-2;
  throw ConfigError("unknown unit suffix '" + suffix + "' for key '" + key + "'");
}

double parse_value(const std::string& raw, const std::string& key) {
  std::istringstream ss(raw);
  double v = 0.0;
  if (!(ss >> v)) throw ConfigError("non-numeric value for key '" + key + "'");
  std::string suffix;
  ss >> suffix;
  std::string extra;
  if (ss >> extra) throw ConfigError("trailing content after value for key '" + key + "'");
  if (!suffix.empty()) v *= unit_scale(suffix, key);
  if (!std::isfinite(v)) throw ConfigError("value for key '" + key + "' is not finite");
  return v;
}

using FieldRef = std::function<double&(ExperimentConfig&)>;

const std::map<std::string, FieldRef>& numeric_fields() {
  static const std::map<std::string, FieldRef> table = {
      {"mass", [](ExperimentConfig& c) -> double& { return c.test_mass.mass; }},
      {"density", [](ExperimentConfig& c) -> double& { return c.test_mass.density; }},
      {"epsilon", [](ExperimentConfig& c) -> double& { return c.test_mass.epsilon; }},
      {"dipole_moment", [](ExperimentConfig& c) -> double& { return c.test_mass.dipole_moment; }},
      {"dipole_angle_theta",
       [](ExperimentConfig& c) -> double& { return c.test_mass.dipole_angle_theta; }},
      {"plate_thickness", [](ExperimentConfig& c) -> double& { return c.plate.thickness_w; }},
      {"plate_side", [](ExperimentConfig& c) -> double& { return c.plate.side_length; }},
      {"youngs_modulus", [](ExperimentConfig& c) -> double& { return c.plate.youngs_modulus; }},
      {"poisson_ratio", [](ExperimentConfig& c) -> double& { return c.plate.poisson_ratio; }},
      {"plate_density", [](ExperimentConfig& c) -> double& { return c.plate.density; }},
      {"plate_temperature", [](ExperimentConfig& c) -> double& { return c.plate.temperature; }},
      {"mode_coefficient_k12",
       [](ExperimentConfig& c) -> double& { return c.plate.mode_coefficient_k12; }},
      {"tau_a", [](ExperimentConfig& c) -> double& { return c.schedule.tau_a; }},
      {"tau", [](ExperimentConfig& c) -> double& { return c.schedule.tau; }},
      {"db_dz", [](ExperimentConfig& c) -> double& { return c.schedule.db_dz; }},
      {"initial_distance",
       [](ExperimentConfig& c) -> double& { return c.schedule.initial_distance; }},
      {"gamma", [](ExperimentConfig& c) -> double& { return c.schedule.decoherence_gamma; }},
      {"delta_d1", [](ExperimentConfig& c) -> double& { return c.imbalance.delta_d1; }},
      {"delta_d2", [](ExperimentConfig& c) -> double& { return c.imbalance.delta_d2; }},
      {"delta_db", [](ExperimentConfig& c) -> double& { return c.imbalance.delta_db; }},
      {"delta_theta", [](ExperimentConfig& c) -> double& { return c.imbalance.delta_theta; }},
  };
  return table;
}

void apply(ExperimentConfig& config, const std::string& key, const std::string& value, int lineno) {
  if (key == "tilt_mode") {
    if (value == "symmetric")
      config.imbalance.tilt_mode = TiltMode::symmetric;
    else if (value == "asymmetric")
      config.imbalance.tilt_mode = TiltMode::asymmetric;
    else
      throw ConfigError("tilt_mode must be 'symmetric' or 'asymmetric', got '" + value + "'");
    return;
  }
  if (key == "biaxial_stress") {
    config.plate.biaxial_stress = parse_value(value, key);
    return;
  }
  const auto& table = numeric_fields();
  const auto it = table.find(key);
  if (it == table.end())
    throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  it->second(config) = parse_value(value, key);
}

}  // namespace

ExperimentConfig parse(std::istream& is) {
  ExperimentConfig config;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    apply(config, key, value, lineno);
  }
  config.validate();
  return config;
}

ExperimentConfig parse_string(const std::string& text) {
  std::istringstream ss(text);
  return parse(ss);
}

ExperimentConfig load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  return parse(f);
}

std::string serialize(const ExperimentConfig& c) {
  std::ostringstream os;
  auto put = [&os](const char* key, double v) { os << key << " = " << csv::field(v) << "\n"; };
  os << "# test mass\n";
  put("mass", c.test_mass.mass);
  put("density", c.test_mass.density);
  put("epsilon", c.test_mass.epsilon);
  put("dipole_moment", c.test_mass.dipole_moment);
  put("dipole_angle_theta", c.test_mass.dipole_angle_theta);
  os << "# plate\n";
  put("plate_thickness", c.plate.thickness_w);
  put("plate_side", c.plate.side_length);
  put("youngs_modulus", c.plate.youngs_modulus);
  put("poisson_ratio", c.plate.poisson_ratio);
  put("plate_density", c.plate.density);
  put("plate_temperature", c.plate.temperature);
  put("mode_coefficient_k12", c.plate.mode_coefficient_k12);
  if (c.plate.biaxial_stress) put("biaxial_stress", *c.plate.biaxial_stress);
  os << "# schedule\n";
  put("tau_a", c.schedule.tau_a);
  put("tau", c.schedule.tau);
  put("db_dz", c.schedule.db_dz);
  put("initial_distance", c.schedule.initial_distance);
  put("gamma", c.schedule.decoherence_gamma);
  os << "# imbalances\n";
  put("delta_d1", c.imbalance.delta_d1);
  put("delta_d2", c.imbalance.delta_d2);
  put("delta_db", c.imbalance.delta_db);
  put("delta_theta", c.imbalance.delta_theta);
  os << "tilt_mode = "
     << (c.imbalance.tilt_mode == TiltMode::symmetric ? "symmetric" : "asymmetric") << "\n";
  return os.str();
}

void save_file(const ExperimentConfig& config, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write config file '" + path + "'");
  f << serialize(config);
}

}  // namespace qgem::config_io
