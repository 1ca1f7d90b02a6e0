#include "nga/engine.hpp"

#include <utility>

#include "nga/errors.hpp"
#include "nga/harness.hpp"
#include "nga/hopfield.hpp"

namespace nga {

namespace {

GlyphSet checked_glyphs(GlyphSet glyphs, const SimConfig& config) {
  if (glyphs.empty()) throw ConfigError("simulation requires a non-empty glyph set");
  validate_glyph_set(glyphs);
  const std::size_t n = glyphs.front().side * glyphs.front().side;
  if (n != config.neuron_count) {
    throw ConfigError("glyph set dimension " + std::to_string(n) +
                      " does not match neuron_count " + std::to_string(config.neuron_count));
  }
  return glyphs;
}

}  // namespace

SimulationEngine::SimulationEngine(const SimConfig& config, GlyphSet glyphs, ThreadPool& pool)
    : config_(config),
      glyphs_(checked_glyphs(std::move(glyphs), config)),
      pool_(pool),
      letter_stream_(config.seed, "letters") {
  validate_config(config_);
  glyph_patterns_ = encode_glyph_set(glyphs_);
  noise_seed_ = splitmix64(config_.seed ^ fnv1a64("noise"));
  init_fresh();
}

void SimulationEngine::init_fresh() {
  RandomStream rep_rng(config_.seed, "repertoire");
  graph_ = build_recognition_repertoire(config_.repertoire_params(), rep_rng);
  repertoire_draws_ = rep_rng.draws();

  RandomStream abs_rng(config_.seed, "abstraction");
  abs_map_ = build_abstraction_map(graph_, config_.abstraction_size, abs_rng);
  abs_weights_.reserve(abs_map_.size());
  for (std::size_t s = 0; s < abs_map_.size(); ++s) {
    abs_weights_.push_back(new_random_group(config_.neuron_count, abs_rng));
  }
  abstraction_draws_ = abs_rng.draws();

  rec_back_.assign(graph_.size(), WeightMatrix(config_.neuron_count));
  abs_back_.assign(abs_map_.size(), WeightMatrix(config_.neuron_count));
  excitations_.assign(graph_.size(), 0.0);
  excitations_snapshot_.assign(graph_.size(), 0.0);
  last_flips_.assign(graph_.size(), 0);
}

SimulationEngine::SimulationEngine(const SimConfig& config, GlyphSet glyphs,
                                   SnapshotState state, ThreadPool& pool)
    : config_(config),
      glyphs_(checked_glyphs(std::move(glyphs), config)),
      pool_(pool),
      letter_stream_(config.seed, "letters") {
  validate_config(config_);
  check_resume_compatible(config_, state);
  glyph_patterns_ = encode_glyph_set(glyphs_);
  noise_seed_ = splitmix64(config_.seed ^ fnv1a64("noise"));

  graph_ = std::move(state.graph);
  abs_weights_ = std::move(state.abstraction_weights);
  abs_map_ = std::move(state.abstraction_map);
  excitations_ = std::move(state.excitations);
  last_flips_ = std::move(state.last_flips);
  presentations_ = state.presentations;
  current_letter_ = state.current_letter;
  stats_.recognition_degenerate = state.recognition_degenerate;
  stats_.abstraction_degenerate = state.abstraction_degenerate;
  repertoire_draws_ = state.repertoire_draws;
  abstraction_draws_ = state.abstraction_draws;
  letter_stream_.skip(state.letter_draws);

  if (current_letter_ != SnapshotState::kNoLetter && current_letter_ >= glyphs_.size()) {
    throw ConfigError("snapshot letter index out of range for the glyph set");
  }

  rec_back_.assign(graph_.size(), WeightMatrix(config_.neuron_count));
  abs_back_.assign(abs_map_.size(), WeightMatrix(config_.neuron_count));
  excitations_snapshot_.assign(graph_.size(), 0.0);
}

GroupState SimulationEngine::group_state(std::size_t i) const {
  GroupState s;
  s.excitation = excitations_.at(i);
  s.last_flips = last_flips_.at(i);
  s.frozen = s.excitation >= config_.learning.freeze_threshold;
  return s;
}

void SimulationEngine::step(const Pattern& pattern) {
  const std::size_t r = graph_.size();
  excitations_snapshot_ = excitations_;

  // Convergence fan-out; groups are independent.
  pool_.for_range(0, r, [&](std::size_t lo, std::size_t hi) {
    std::vector<double> scratch;
    for (std::size_t i = lo; i < hi; ++i) {
      last_flips_[i] = flips_to_convergence(graph_.groups[i], pattern, scratch);
    }
  });

  const bool noisy = config_.learning.noise_sigma > 0.0;
  const std::uint64_t t = presentations_;
  pool_.for_range(0, r, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const double noise =
          noisy ? config_.learning.noise_sigma * keyed_gaussian(noise_seed_, t, i) : 0.0;
      excitations_[i] = recognition_excitation(last_flips_[i], config_.learning) +
                        config_.learning.attenuation * excitations_snapshot_[i] + noise;
    }
  });

  // Both propagations read the pre-step snapshot.
  propagate_recognition(graph_.groups, excitations_snapshot_, graph_, config_.learning,
                        rec_back_, stats_, &pool_);
  propagate_abstraction(abs_weights_, graph_.groups, excitations_snapshot_, abs_map_,
                        config_.learning, abs_back_, stats_, &pool_);
  graph_.groups.swap(rec_back_);
  abs_weights_.swap(abs_back_);
  ++presentations_;
}

void SimulationEngine::present(const Pattern& pattern) {
  if (pattern.size() != config_.neuron_count) {
    throw std::invalid_argument("present: pattern length != neuron_count");
  }
  step(pattern);
}

void SimulationEngine::advance(std::uint64_t count) {
  for (std::uint64_t i = 0; i < count; ++i) {
    if (presentations_ % config_.repetitions == 0) {
      current_letter_ = static_cast<std::uint32_t>(letter_stream_.next_below(glyphs_.size()));
    }
    step(glyph_patterns_[current_letter_]);
  }
}

MetricsRecord SimulationEngine::take_census() const {
  MetricsRecord rec;
  rec.presentation_index = presentations_;
  rec.recognition_census = census(graph_.groups, glyph_patterns_, &pool_);
  rec.abstraction_census = census(abs_weights_, glyph_patterns_, &pool_);
  rec.letters_learned = count_letters_learned(rec.abstraction_census);
  return rec;
}

SnapshotState SimulationEngine::snapshot() const {
  SnapshotState s;
  s.config_text = canonical_config_text(config_);
  s.master_seed = config_.seed;
  s.presentations = presentations_;
  s.current_letter = current_letter_;
  s.graph = graph_;
  s.excitations = excitations_;
  s.last_flips = last_flips_;
  s.abstraction_weights = abs_weights_;
  s.abstraction_map = abs_map_;
  s.repertoire_draws = repertoire_draws_;
  s.abstraction_draws = abstraction_draws_;
  s.letter_draws = letter_stream_.draws();
  s.recognition_degenerate = stats_.recognition_degenerate;
  s.abstraction_degenerate = stats_.abstraction_degenerate;
  return s;
}

void check_resume_compatible(const SimConfig& config, const SnapshotState& state) {
  SimConfig stored = parse_config_text(state.config_text);
  // Continuing to a different horizon is the point of resuming; everything
  // else must match for the run to be the same run.
  stored.total_presentations = config.total_presentations;
  if (!(stored == config)) {
    throw ConfigError(
        "snapshot/config mismatch: the snapshot was written under a different "
        "configuration (only total_presentations may change on resume)");
  }
  if (state.graph.neuron_count != config.neuron_count ||
      state.graph.size() != config.recognition_size ||
      state.abstraction_weights.size() != config.abstraction_size) {
    throw ConfigError("snapshot/config dimension mismatch");
  }
}

}  // namespace nga
