#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nga/repertoire.hpp"
#include "nga/weight_matrix.hpp"

namespace nga {

// Complete serializable simulation state. Round-trips bit-exactly through
// the snapshot file, which is what makes checkpoint/resume equivalent to an
// uninterrupted run.
struct SnapshotState {
  std::string config_text;  // canonical config echo of the run that wrote it
  std::uint64_t master_seed = 0;
  std::uint64_t presentations = 0;
  std::uint32_t current_letter = kNoLetter;  // letter live in the current block

  RepertoireGraph graph;
  std::vector<double> excitations;
  std::vector<std::uint64_t> last_flips;

  std::vector<WeightMatrix> abstraction_weights;
  AbstractionMap abstraction_map;

  // Stream positions, for bit-exact resume.
  std::uint64_t repertoire_draws = 0;
  std::uint64_t abstraction_draws = 0;
  std::uint64_t letter_draws = 0;

  std::uint64_t recognition_degenerate = 0;
  std::uint64_t abstraction_degenerate = 0;

  static constexpr std::uint32_t kNoLetter = 0xffffffffu;
};

// Length-prefixed little-endian binary layout with a magic header, a format
// version, and a trailing whole-file checksum.
void save_snapshot(const std::filesystem::path& file, const SnapshotState& state);
SnapshotState load_snapshot(const std::filesystem::path& file);

// FNV-1a over the file bytes; the "snapshot hash" reported by the CLI.
std::uint64_t file_fingerprint(const std::filesystem::path& file);

}  // namespace nga
