#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nga/pattern.hpp"
#include "nga/rng.hpp"
#include "nga/weight_matrix.hpp"

namespace nga {

struct ConvergenceResult {
  Pattern stable_state;
  std::uint64_t flips = 0;   // state-changing updates (q)
  std::uint64_t visits = 0;  // neuron evaluations performed
};

// Fresh group: every free pair drawn uniformly from {+1, -1}, mirrored;
// zero diagonal. Draw order is upper-triangle row-major.
WeightMatrix new_random_group(std::size_t n, RandomStream& rng);

// Threshold rule: active iff the weighted input sum is at least zero.
std::uint8_t neuron_update(const Pattern& state, const WeightMatrix& w, std::size_t k);

double energy(const WeightMatrix& w, const Pattern& state);

bool is_stable(const WeightMatrix& w, const Pattern& p);

ConvergenceResult converge(const WeightMatrix& w, const Pattern& initial);

// Copy of w with `count` distinct free pairs resampled from {+1, -1}.
WeightMatrix mutate_weights(const WeightMatrix& w, std::size_t count, RandomStream& rng);

namespace detail {

inline void check_dims(const WeightMatrix& w, const Pattern& p, const char* op) {
  if (p.size() != w.dim()) {
    throw std::invalid_argument(std::string(op) + ": pattern length != matrix dimension");
  }
}

// Cyclic sweep k = 0..n-1, 0..; stops after n consecutive flip-free visits.
// The state mirror is kept in doubles so the inner product, the single
// source of truth for the update rule, is the same arithmetic everywhere.
template <class OnFlip>
ConvergenceResult converge_impl(const WeightMatrix& w, const Pattern& initial, OnFlip&& on_flip) {
  check_dims(w, initial, "converge");
  const std::size_t n = w.dim();
  std::vector<double> state(n);
  for (std::size_t i = 0; i < n; ++i) state[i] = initial[i];

  ConvergenceResult result;
  std::size_t calm = 0;
  std::size_t k = 0;
  while (calm < n) {
    const double* row = w.row(k);
    double h = 0.0;
    for (std::size_t j = 0; j < n; ++j) h += row[j] * state[j];
    const double v = h >= 0.0 ? 1.0 : 0.0;
    ++result.visits;
    if (v != state[k]) {
      state[k] = v;
      ++result.flips;
      calm = 0;
      on_flip(k);
    } else {
      ++calm;
    }
    if (++k == n) k = 0;
  }

  Pattern out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, state[i] != 0.0);
  result.stable_state = std::move(out);
  return result;
}

}  // namespace detail

// converge with a per-flip observer: on_flip(neuron_index) fires after the
// state bit changed. Used by tests that track the energy trajectory.
template <class OnFlip>
ConvergenceResult converge_observed(const WeightMatrix& w, const Pattern& initial, OnFlip&& on_flip) {
  return detail::converge_impl(w, initial, std::forward<OnFlip>(on_flip));
}

// Flip count only, with caller-owned scratch; the hot path for repertoire
// presentation.
std::uint64_t flips_to_convergence(const WeightMatrix& w, const Pattern& initial,
                                   std::vector<double>& scratch);

}  // namespace nga
