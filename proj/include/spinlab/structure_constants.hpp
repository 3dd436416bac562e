#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spinlab {

/// Dense structure constants of a Lie algebra on a fixed basis:
/// [b_i, b_j] = sum_k c(i, j, k) b_k, indices 1-based.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int dim)
      : dim_(dim), data_(static_cast<std::size_t>(dim) * dim * dim, 0.0) {
    if (dim < 1) throw std::invalid_argument("Lie algebra dimension must be positive");
  }

  int dim() const { return dim_; }
  double& operator()(int i, int j, int k) { return data_[offset(i, j, k)]; }
  double operator()(int i, int j, int k) const { return data_[offset(i, j, k)]; }

 private:
  std::size_t offset(int i, int j, int k) const {
    return (static_cast<std::size_t>(i - 1) * dim_ + (j - 1)) * dim_ + (k - 1);
  }
  int dim_ = 0;
  std::vector<double> data_;
};

}  // namespace spinlab
