#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nga {

// Symmetric coupling matrix with zero diagonal; fully characterizes one
// neuronal group. Entries stay within [-1, 1]: fresh matrices hold +-1 and
// every propagation update renormalizes to max-abs exactly 1.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(std::size_t n) : n_(n), w_(n * n, 0.0) {}

  std::size_t dim() const { return n_; }

  double at(std::size_t k, std::size_t j) const { return w_[k * n_ + j]; }

  // Sets the symmetric pair (k, j) and (j, k); the diagonal is untouchable.
  void set_pair(std::size_t k, std::size_t j, double v) {
    if (k >= n_ || j >= n_) throw std::invalid_argument("WeightMatrix::set_pair: index out of range");
    if (k == j) throw std::invalid_argument("WeightMatrix::set_pair: diagonal is fixed at zero");
    w_[k * n_ + j] = v;
    w_[j * n_ + k] = v;
  }

  const double* row(std::size_t k) const { return w_.data() + k * n_; }

  // Row-major storage; mutating callers are responsible for symmetry and
  // the zero diagonal.
  const std::vector<double>& raw() const { return w_; }
  std::vector<double>& raw() { return w_; }

  double max_abs() const {
    double m = 0.0;
    for (double v : w_) m = std::max(m, std::fabs(v));
    return m;
  }

  std::size_t free_pair_count() const { return n_ * (n_ - 1) / 2; }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> w_;
};

// Row-major rank of the upper-triangle pair sequence (0,1), (0,2), ...,
// (n-2, n-1), mapped back to (k, j) with k < j.
inline std::pair<std::size_t, std::size_t> pair_from_rank(std::size_t rank, std::size_t n) {
  std::size_t k = 0;
  std::size_t row = n - 1;  // pairs in row k
  while (rank >= row) {
    rank -= row;
    ++k;
    --row;
  }
  return {k, k + 1 + rank};
}

}  // namespace nga
