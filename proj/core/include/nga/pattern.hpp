#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nga {

// Fixed-length 0/1 activation vector. For a square glyph of side g, bit
// r*g + c holds grid cell (row r, column c).
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::size_t n) : bits_(n, 0) {}

  static Pattern from_bits(std::vector<std::uint8_t> bits) {
    for (auto b : bits) {
      if (b > 1) throw std::invalid_argument("Pattern: elements must be 0 or 1");
    }
    Pattern p;
    p.bits_ = std::move(bits);
    return p;
  }

  // Bit i of the mask becomes element i; useful for exhaustive state scans.
  static Pattern from_mask(std::uint64_t mask, std::size_t n) {
    if (n > 64) throw std::invalid_argument("Pattern::from_mask: n exceeds 64");
    Pattern p(n);
    for (std::size_t i = 0; i < n; ++i) p.bits_[i] = (mask >> i) & 1u;
    return p;
  }

  // Parses a string of '0'/'1' characters.
  static Pattern parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1') throw std::invalid_argument("Pattern::parse: expected only 0/1");
      bits.push_back(c == '1' ? 1 : 0);
    }
    return from_bits(std::move(bits));
  }

  std::size_t size() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool v) { bits_.at(i) = v ? 1 : 0; }
  void flip(std::size_t i) { bits_.at(i) ^= 1u; }

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::size_t popcount() const {
    return std::accumulate(bits_.begin(), bits_.end(), std::size_t{0});
  }

  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace nga
