#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nga/parallel.hpp"
#include "nga/repertoire.hpp"
#include "nga/weight_matrix.hpp"

namespace nga {

// The thresholds are calibrated against the excitation bands that arise
// under the 10-repetition presentation protocol. Every group accrues a
// small credit on every presentation (flip counts are always finite), so
// with attenuation 0.97 the population floor settles near 4-5. A group
// whose own pattern is shown spikes to ~26 across a block, while
// near-misses (one flip) top out near 12. The propagation threshold sits
// between those bands: only genuine recognizers spread their weights, and
// the floor stays silent. The freeze threshold sits just above the floor,
// so recently excited groups keep their matrices through the next few
// letter blocks.
struct LearningParams {
  double attenuation = 0.97;           // per-step geometric decay of excitation
  double rec_learning_rate = 0.05;     // recognition propagation rate
  double abs_learning_rate = 0.3;      // abstraction propagation rate
  double excitation_threshold = 14.0;  // neighbors below this do not propagate
  double abs_threshold_coeff = 0.1;    // abstraction gate, per connected group
  double freeze_threshold = 8.0;       // excitation at which weights lock
  double zero_flip_excitation = 3.0;   // excitation credit for an exact recognition
  double noise_sigma = 0.0;            // stddev of additive excitation noise

  friend bool operator==(const LearningParams&, const LearningParams&) = default;
};

// Throws ConfigError on out-of-range values.
void validate(const LearningParams& params);

// Per-group mutable learning state.
struct GroupState {
  double excitation = 0.0;
  std::uint64_t last_flips = 0;
  bool frozen = false;
};

// Excitation credit for a presentation that converged in `flips` updates:
// 1/flips, except an immediate recognition outranks everything.
double recognition_excitation(std::uint64_t flips, const LearningParams& params);

// One excitation step: stimulus credit (if any) plus attenuated carry-over
// plus noise. The frozen flag is recomputed against freeze_threshold.
GroupState update_excitation(const GroupState& prev, std::optional<std::uint64_t> flips,
                             const LearningParams& params, double noise = 0.0);

struct PropagationStats {
  std::uint64_t recognition_degenerate = 0;  // all-zero candidates retained
  std::uint64_t abstraction_degenerate = 0;
};

// Recognition weight propagation, bulk-synchronous: every group's new matrix
// is computed from the same (weights, excitations) snapshot, so the result
// does not depend on evaluation order. Groups whose snapshot excitation is
// at or above freeze_threshold are copied through unchanged. `out` must
// already hold graph.size() matrices of the right dimension.
void propagate_recognition(const std::vector<WeightMatrix>& weights,
                           const std::vector<double>& excitations,
                           const RepertoireGraph& graph, const LearningParams& params,
                           std::vector<WeightMatrix>& out, PropagationStats& stats,
                           ThreadPool* pool = nullptr);

// Abstraction weight propagation. A group updates only when the summed
// over-threshold excitation of its connected recognition groups exceeds its
// gate (abs_threshold_coeff * connection count); otherwise it is copied
// through.
void propagate_abstraction(const std::vector<WeightMatrix>& abs_weights,
                           const std::vector<WeightMatrix>& rec_weights,
                           const std::vector<double>& excitations, const AbstractionMap& map,
                           const LearningParams& params, std::vector<WeightMatrix>& out,
                           PropagationStats& stats, ThreadPool* pool = nullptr);

// Per-group abstraction gates: abs_threshold_coeff * |connections|.
std::vector<double> compute_abstraction_gates(const AbstractionMap& map,
                                              const LearningParams& params);

}  // namespace nga
