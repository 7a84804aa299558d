#pragma once

#include <vector>

#include "hgw/rational.hpp"

namespace hgw {

/// Rational tensor q[i][j][k] over indices 0..size-1: the coefficients of
/// x_i * x_j = sum_k q[i][j][k] x_k. For graph-derived instances this is
/// the table p_{i,j}^k of two-jump sphere-to-sphere probabilities.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int size)
      : size_(size),
        q_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size) *
           static_cast<std::size_t>(size)) {}

  int size() const { return size_; }

  Rat& at(int i, int j, int k) { return q_[idx(i, j, k)]; }
  const Rat& at(int i, int j, int k) const { return q_[idx(i, j, k)]; }

  /// Coefficient vector of x_i * x_j.
  std::vector<Rat> row(int i, int j) const {
    std::vector<Rat> out(static_cast<std::size_t>(size_));
    for (int k = 0; k < size_; ++k) out[static_cast<std::size_t>(k)] = at(i, j, k);
    return out;
  }

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.size_ == b.size_ && a.q_ == b.q_;
  }
  friend bool operator!=(const StructureConstants& a, const StructureConstants& b) {
    return !(a == b);
  }

 private:
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
            static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(k);
  }

  int size_ = 0;
  std::vector<Rat> q_;
};

}  // namespace hgw
