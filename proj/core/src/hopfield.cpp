#include "nga/hopfield.hpp"

namespace nga {

WeightMatrix new_random_group(std::size_t n, RandomStream& rng) {
  if (n == 0) throw std::invalid_argument("new_random_group: dimension must be at least 1");
  WeightMatrix w(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t j = k + 1; j < n; ++j) {
      w.set_pair(k, j, rng.next_sign());
    }
  }
  return w;
}

std::uint8_t neuron_update(const Pattern& state, const WeightMatrix& w, std::size_t k) {
  detail::check_dims(w, state, "neuron_update");
  if (k >= w.dim()) throw std::invalid_argument("neuron_update: neuron index out of range");
  const double* row = w.row(k);
  double h = 0.0;
  for (std::size_t j = 0; j < w.dim(); ++j) h += row[j] * static_cast<double>(state[j]);
  return h >= 0.0 ? 1 : 0;
}

double energy(const WeightMatrix& w, const Pattern& state) {
  detail::check_dims(w, state, "energy");
  const std::size_t n = w.dim();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (state[k] == 0) continue;
    const double* row = w.row(k);
    double h = 0.0;
    for (std::size_t j = 0; j < n; ++j) h += row[j] * static_cast<double>(state[j]);
    total += h;
  }
  return -0.5 * total;
}

bool is_stable(const WeightMatrix& w, const Pattern& p) {
  detail::check_dims(w, p, "is_stable");
  const std::size_t n = w.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const double* row = w.row(k);
    double h = 0.0;
    for (std::size_t j = 0; j < n; ++j) h += row[j] * static_cast<double>(p[j]);
    const std::uint8_t v = h >= 0.0 ? 1 : 0;
    if (v != p[k]) return false;
  }
  return true;
}

ConvergenceResult converge(const WeightMatrix& w, const Pattern& initial) {
  return detail::converge_impl(w, initial, [](std::size_t) {});
}

std::uint64_t flips_to_convergence(const WeightMatrix& w, const Pattern& initial,
                                   std::vector<double>& scratch) {
  detail::check_dims(w, initial, "converge");
  const std::size_t n = w.dim();
  scratch.resize(n);
  for (std::size_t i = 0; i < n; ++i) scratch[i] = initial[i];

  std::uint64_t flips = 0;
  std::size_t calm = 0;
  std::size_t k = 0;
  while (calm < n) {
    const double* row = w.row(k);
    double h = 0.0;
    for (std::size_t j = 0; j < n; ++j) h += row[j] * scratch[j];
    const double v = h >= 0.0 ? 1.0 : 0.0;
    if (v != scratch[k]) {
      scratch[k] = v;
      ++flips;
      calm = 0;
    } else {
      ++calm;
    }
    if (++k == n) k = 0;
  }
  return flips;
}

WeightMatrix mutate_weights(const WeightMatrix& w, std::size_t count, RandomStream& rng) {
  const std::size_t pairs = w.free_pair_count();
  if (count > pairs) throw std::invalid_argument("mutate_weights: count exceeds free pair count");
  WeightMatrix out = w;
  const auto chosen = rng.sample_without_replacement(count, pairs);
  for (const auto rank : chosen) {
    const auto [k, j] = pair_from_rank(static_cast<std::size_t>(rank), w.dim());
    out.set_pair(k, j, rng.next_sign());
  }
  return out;
}

}  // namespace nga
