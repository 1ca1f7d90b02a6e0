#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nga/config.hpp"
#include "nga/engine.hpp"
#include "nga/metrics.hpp"
#include "nga/snapshot.hpp"

namespace nga {

// Flip count per group for one stimulus; weights untouched.
std::vector<std::uint64_t> present_to_repertoire(const std::vector<WeightMatrix>& groups,
                                                 const Pattern& pattern,
                                                 ThreadPool* pool = nullptr);

// Per-glyph count of groups for which the glyph's pattern is a stable state.
std::vector<std::uint32_t> census(const std::vector<WeightMatrix>& groups,
                                  const std::vector<Pattern>& glyph_patterns,
                                  ThreadPool* pool = nullptr);

// Loads the glyph set named by the config ("builtin" or a file path).
GlyphSet resolve_glyphs(const SimConfig& config);

struct RunResult {
  std::vector<MetricsRecord> records;
  std::filesystem::path csv_path;
  std::filesystem::path summary_path;
  std::filesystem::path snapshot_path;
};

struct RunOptions {
  std::filesystem::path output_dir;
  std::optional<std::filesystem::path> resume_from;  // start from a snapshot
  bool checkpoints = false;  // also write a snapshot at every census point
  std::ostream* log = nullptr;
};

// The full driver: build or resume, census at the start and after every
// census_cadence presentations, metrics + summary + final snapshot on disk.
// Deterministic artifacts for a given (config, seed), any worker count.
RunResult run_simulation(const SimConfig& config, const RunOptions& options, ThreadPool& pool);

// Transparency probe of a single group in a snapshot.
struct ProbeResult {
  std::string label;
  Pattern probe;
  std::uint64_t flips = 0;
  Pattern final_state;
  double final_energy = 0.0;
};

struct GroupReport {
  std::size_t group_id = 0;
  bool is_abstraction = false;
  double excitation = 0.0;
  bool frozen = false;
  std::uint64_t last_flips = 0;
  std::vector<std::uint32_t> neighbors;
  WeightMatrix weights;
  std::vector<ProbeResult> probes;
  std::vector<Pattern> stable_states;  // filled only when enumerate was requested
  bool enumerated = false;
};

inline constexpr std::size_t kMaxExhaustiveNeurons = 20;

// `group_id` indexes the recognition repertoire, or the abstraction
// repertoire when `abstraction` is set. Enumeration scans all 2^n states and
// is refused above kMaxExhaustiveNeurons.
GroupReport inspect_group(const SnapshotState& state, const LearningParams& params,
                          std::size_t group_id, bool abstraction,
                          const std::vector<std::pair<std::string, Pattern>>& probes,
                          bool enumerate);

std::string format_report(const GroupReport& report);

// All update-stable states of one matrix by exhaustive scan (n <= 20).
std::vector<Pattern> enumerate_stable_states(const WeightMatrix& w);

}  // namespace nga
