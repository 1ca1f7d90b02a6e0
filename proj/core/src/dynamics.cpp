#include "nga/dynamics.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "nga/errors.hpp"

namespace nga {

void validate(const LearningParams& params) {
  if (!(params.attenuation >= 0.0 && params.attenuation < 1.0)) {
    throw ConfigError("attenuation must be in [0, 1)");
  }
  if (!(params.rec_learning_rate > 0.0)) throw ConfigError("rec_learning_rate must be positive");
  if (!(params.abs_learning_rate > 0.0)) throw ConfigError("abs_learning_rate must be positive");
  if (!(params.zero_flip_excitation > 1.0)) {
    throw ConfigError("zero_flip_excitation must exceed 1 so an exact recognition outranks q=1");
  }
  if (!(params.noise_sigma >= 0.0)) throw ConfigError("noise_sigma must be non-negative");
  if (!(params.abs_threshold_coeff >= 0.0)) throw ConfigError("abs_threshold_coeff must be non-negative");
}

double recognition_excitation(std::uint64_t flips, const LearningParams& params) {
  if (flips == 0) return params.zero_flip_excitation;
  return 1.0 / static_cast<double>(flips);
}

GroupState update_excitation(const GroupState& prev, std::optional<std::uint64_t> flips,
                             const LearningParams& params, double noise) {
  GroupState next;
  const double credit = flips ? recognition_excitation(*flips, params) : 0.0;
  next.excitation = credit + params.attenuation * prev.excitation + noise;
  next.last_flips = flips.value_or(prev.last_flips);
  next.frozen = next.excitation >= params.freeze_threshold;
  return next;
}

namespace {

// out = base, then out += coeff * other for each contribution, then
// normalize to max-abs exactly 1 (entrywise division by the max). Returns
// false when the candidate is identically zero, in which case out = base.
class BlendAccumulator {
 public:
  void reset(const WeightMatrix& base, WeightMatrix& out) {
    out_ = &out;
    out.raw() = base.raw();
    dirty_ = false;
  }

  void add(double coeff, const WeightMatrix& other) {
    auto& o = out_->raw();
    const auto& w = other.raw();
    for (std::size_t e = 0; e < o.size(); ++e) o[e] += coeff * w[e];
    dirty_ = true;
  }

  // true if a nonzero update was applied; false if nothing was added or the
  // candidate degenerated to zero (caller restores base and counts it).
  bool finish(const WeightMatrix& base, bool* degenerate) {
    *degenerate = false;
    if (!dirty_) return false;
    const double m = out_->max_abs();
    if (m == 0.0) {
      out_->raw() = base.raw();
      *degenerate = true;
      return false;
    }
    auto& o = out_->raw();
    for (auto& v : o) v /= m;
    return true;
  }

 private:
  WeightMatrix* out_ = nullptr;
  bool dirty_ = false;
};

}  // namespace

void propagate_recognition(const std::vector<WeightMatrix>& weights,
                           const std::vector<double>& excitations,
                           const RepertoireGraph& graph, const LearningParams& params,
                           std::vector<WeightMatrix>& out, PropagationStats& stats,
                           ThreadPool* pool) {
  const std::size_t r = graph.size();
  if (weights.size() != r || excitations.size() != r || out.size() != r) {
    throw std::invalid_argument("propagate_recognition: snapshot sizes disagree with graph");
  }
  std::atomic<std::uint64_t> degenerate{0};

  auto body = [&](std::size_t lo, std::size_t hi) {
    BlendAccumulator acc;
    for (std::size_t i = lo; i < hi; ++i) {
      if (excitations[i] >= params.freeze_threshold) {
        out[i].raw() = weights[i].raw();
        continue;
      }
      acc.reset(weights[i], out[i]);
      for (const auto l : graph.neighbors[i]) {
        const double over = excitations[l] - params.excitation_threshold;
        if (over > 0.0) acc.add(params.rec_learning_rate * over, weights[l]);
      }
      bool bad = false;
      acc.finish(weights[i], &bad);
      if (bad) degenerate.fetch_add(1, std::memory_order_relaxed);
    }
  };

  if (pool) {
    pool->for_range(0, r, body);
  } else {
    body(0, r);
  }
  stats.recognition_degenerate += degenerate.load();
}

void propagate_abstraction(const std::vector<WeightMatrix>& abs_weights,
                           const std::vector<WeightMatrix>& rec_weights,
                           const std::vector<double>& excitations, const AbstractionMap& map,
                           const LearningParams& params, std::vector<WeightMatrix>& out,
                           PropagationStats& stats, ThreadPool* pool) {
  const std::size_t a = map.size();
  if (abs_weights.size() != a || out.size() != a) {
    throw std::invalid_argument("propagate_abstraction: snapshot sizes disagree with map");
  }
  std::atomic<std::uint64_t> degenerate{0};

  auto body = [&](std::size_t lo, std::size_t hi) {
    BlendAccumulator acc;
    for (std::size_t s = lo; s < hi; ++s) {
      const auto& conn = map.connections[s];
      if (conn.empty()) throw std::invalid_argument("propagate_abstraction: empty connection set");
      double gate = 0.0;
      for (const auto v : conn) {
        const double over = excitations[v] - params.excitation_threshold;
        if (over > 0.0) gate += over;
      }
      const double gate_level = params.abs_threshold_coeff * static_cast<double>(conn.size());
      if (gate <= gate_level) {
        out[s].raw() = abs_weights[s].raw();
        continue;
      }
      acc.reset(abs_weights[s], out[s]);
      for (const auto v : conn) {
        const double over = excitations[v] - params.excitation_threshold;
        if (over > 0.0) acc.add(params.abs_learning_rate * over, rec_weights[v]);
      }
      bool bad = false;
      acc.finish(abs_weights[s], &bad);
      if (bad) degenerate.fetch_add(1, std::memory_order_relaxed);
    }
  };

  if (pool) {
    pool->for_range(0, a, body);
  } else {
    body(0, a);
  }
  stats.abstraction_degenerate += degenerate.load();
}

std::vector<double> compute_abstraction_gates(const AbstractionMap& map,
                                              const LearningParams& params) {
  std::vector<double> gates;
  gates.reserve(map.size());
  for (const auto& conn : map.connections) {
    if (conn.empty()) throw std::invalid_argument("compute_abstraction_gates: empty connection set");
    gates.push_back(params.abs_threshold_coeff * static_cast<double>(conn.size()));
  }
  return gates;
}

}  // namespace nga
