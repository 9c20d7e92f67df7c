#pragma once

#include <iosfwd>
#include <string>

#include "qgem/types.hpp"

// Plain-text configuration files: one `key = value` pair per line, `#`
// comments, floats in scientific notation. Values are SI by default;
// lengths accept the suffixes um, mm, fm, and dipole moments accept e_cm.
// Unknown keys are an error.

namespace qgem::config_io {

ExperimentConfig parse(std::istream& is);
ExperimentConfig parse_string(const std::string& text);
ExperimentConfig load_file(const std::string& path);

/// Serializes with round-trip-exact floats; parse(serialize(c)) == c.
std::string serialize(const ExperimentConfig& config);
void save_file(const ExperimentConfig& config, const std::string& path);

}  // namespace qgem::config_io
