#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace nga {

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic named substream of one master seed. Every extraction goes
// through next_u64() so the stream position is a single counter, which
// snapshots store and restore.
//
// Bounded draws and sampling are implemented here rather than with
// std::uniform_int_distribution, whose output is implementation-defined;
// mt19937_64 itself is fully specified, so streams replay identically
// across compilers.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::string_view name)
      : engine_(splitmix64(master_seed ^ fnv1a64(name))) {}

  std::uint64_t next_u64() {
    ++draws_;
    return engine_();
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  // +1 or -1 with equal probability.
  double next_sign() { return next_bool() ? 1.0 : -1.0; }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound) by rejection; unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("RandomStream::next_below: bound must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    for (;;) {
      const std::uint64_t u = next_u64();
      if (u < limit) return u % bound;
    }
  }

  // k distinct values from [0, n), in selection order.
  std::vector<std::uint64_t> sample_without_replacement(std::uint64_t k, std::uint64_t n);

  std::uint64_t draws() const { return draws_; }

  // Replays the stream to a recorded position.
  void skip(std::uint64_t count) {
    engine_.discard(count);
    draws_ += count;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

inline std::vector<std::uint64_t> RandomStream::sample_without_replacement(std::uint64_t k, std::uint64_t n) {
  if (k > n) throw std::invalid_argument("sample_without_replacement: k exceeds population");
  std::vector<std::uint64_t> out;
  out.reserve(k);
  if (k == 0) return out;
  if (k * 2 >= n) {
    // Partial Fisher-Yates over the full index range.
    std::vector<std::uint64_t> idx(n);
    for (std::uint64_t i = 0; i < n; ++i) idx[i] = i;
    for (std::uint64_t i = 0; i < k; ++i) {
      const std::uint64_t j = i + next_below(n - i);
      std::swap(idx[i], idx[j]);
      out.push_back(idx[i]);
    }
    return out;
  }
  // Sparse case: rejection against the already-chosen set.
  std::vector<bool> taken(n, false);
  while (out.size() < k) {
    const std::uint64_t v = next_below(n);
    if (!taken[v]) {
      taken[v] = true;
      out.push_back(v);
    }
  }
  return out;
}

// Standard-normal value keyed by (seed, a, b): stateless, so noise draws do
// not perturb any sequential stream and are independent of worker layout.
inline double keyed_gaussian(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t r1 = splitmix64(seed ^ splitmix64(a ^ splitmix64(b)));
  const std::uint64_t r2 = splitmix64(r1 ^ 0x6a09e667f3bcc909ull);
  // u1 in (0, 1] keeps the log finite.
  const double u1 = (static_cast<double>(r1 >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(r2 >> 11) * 0x1.0p-53;
  constexpr double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace nga
