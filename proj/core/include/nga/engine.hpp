#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nga/alphabet.hpp"
#include "nga/config.hpp"
#include "nga/dynamics.hpp"
#include "nga/metrics.hpp"
#include "nga/parallel.hpp"
#include "nga/repertoire.hpp"
#include "nga/snapshot.hpp"

namespace nga {

// Owns both repertoires and drives the per-presentation cycle:
//
//   snapshot (weights, excitations)
//   -> converge every recognition group on the stimulus (flip counts)
//   -> update every excitation from the flip counts
//   -> propagate recognition weights   (reads the snapshot)
//   -> propagate abstraction weights   (reads the snapshot)
//
// Both propagations and the freeze test read the pre-step snapshot, so the
// weights at step t are a function of state at t-1 only, and per-group work
// parallelizes with no coordination. Given (config, seed) the evolution is
// bit-for-bit deterministic for any worker count.
class SimulationEngine {
 public:
  // Fresh build: constructs both repertoires from the config's seed.
  SimulationEngine(const SimConfig& config, GlyphSet glyphs, ThreadPool& pool);

  // Resume from a snapshot; config must structurally match (see
  // check_resume_compatible).
  SimulationEngine(const SimConfig& config, GlyphSet glyphs, SnapshotState state,
                   ThreadPool& pool);

  // Runs `count` presentations under the block protocol: a glyph is drawn
  // uniformly at each block boundary and presented `repetitions` times.
  void advance(std::uint64_t count);

  // One presentation of an explicit pattern; bypasses the letter stream.
  void present(const Pattern& pattern);

  // Census of both repertoires against the glyph set (weights untouched).
  MetricsRecord take_census() const;

  SnapshotState snapshot() const;

  const SimConfig& config() const { return config_; }
  const GlyphSet& glyphs() const { return glyphs_; }
  const RepertoireGraph& graph() const { return graph_; }
  const std::vector<WeightMatrix>& recognition_weights() const { return graph_.groups; }
  const std::vector<WeightMatrix>& abstraction_weights() const { return abs_weights_; }
  const AbstractionMap& abstraction_map() const { return abs_map_; }
  const std::vector<double>& excitations() const { return excitations_; }
  const std::vector<std::uint64_t>& last_flips() const { return last_flips_; }
  GroupState group_state(std::size_t i) const;
  std::uint64_t presentations() const { return presentations_; }
  const PropagationStats& propagation_stats() const { return stats_; }

 private:
  void init_fresh();
  void step(const Pattern& pattern);

  SimConfig config_;
  GlyphSet glyphs_;
  std::vector<Pattern> glyph_patterns_;
  ThreadPool& pool_;

  RepertoireGraph graph_;           // graph_.groups is the live front buffer
  std::vector<WeightMatrix> rec_back_;
  std::vector<WeightMatrix> abs_weights_;
  std::vector<WeightMatrix> abs_back_;
  AbstractionMap abs_map_;

  std::vector<double> excitations_;
  std::vector<double> excitations_snapshot_;
  std::vector<std::uint64_t> last_flips_;

  std::uint64_t presentations_ = 0;
  std::uint32_t current_letter_ = SnapshotState::kNoLetter;
  PropagationStats stats_;

  RandomStream letter_stream_;
  std::uint64_t repertoire_draws_ = 0;   // recorded for snapshots
  std::uint64_t abstraction_draws_ = 0;
  std::uint64_t noise_seed_ = 0;
};

// Throws ConfigError when `config` cannot continue the run captured in
// `state` (any field other than total_presentations differs).
void check_resume_compatible(const SimConfig& config, const SnapshotState& state);

}  // namespace nga
