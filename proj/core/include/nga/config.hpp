#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "nga/dynamics.hpp"
#include "nga/repertoire.hpp"

namespace nga {

// Full description of one simulation; everything a run needs besides the
// worker count and output paths.
struct SimConfig {
  std::size_t neuron_count = 16;
  std::size_t recognition_size = 5000;
  std::size_t abstraction_size = 100;
  std::size_t fanout = 5;
  std::size_t branch_sample = 3;
  std::size_t back_edges = 8;
  std::size_t mutation_count = 120;
  LearningParams learning;
  std::size_t repetitions = 10;          // consecutive presentations per drawn letter
  std::uint64_t total_presentations = 2000;
  std::uint64_t census_cadence = 100;    // presentations between census points
  std::uint64_t seed = 1;
  std::string glyph_source = "builtin";  // "builtin" or a glyph file path

  RepertoireParams repertoire_params() const {
    return RepertoireParams{recognition_size, mutation_count, fanout,
                            branch_sample,    back_edges,     neuron_count};
  }

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

// Parses `key = value` lines ('#' starts a comment line; unknown or
// duplicate keys are rejected). Missing keys keep their defaults.
SimConfig parse_config_text(const std::string& text);
SimConfig parse_config_file(const std::filesystem::path& file);

// Bounds checks across all fields; throws ConfigError.
void validate_config(const SimConfig& config);

// Canonical serialization: every key, fixed order, shortest round-trip
// float formatting. parse_config_text(canonical_config_text(c)) == c.
std::string canonical_config_text(const SimConfig& config);

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace nga
