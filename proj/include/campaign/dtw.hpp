#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace campaign {

/// Symmetric n x n matrix with zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  /// Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Cumulative squared-difference cost of the optimal monotone alignment,
/// unconstrained (no band), no square root.
double dtw_distance(std::span<const double> x, std::span<const double> y);

/// Same recurrence with caller-provided scratch; no allocation once warm.
double dtw_distance(std::span<const double> x, std::span<const double> y, std::vector<double>& scratch);

/// PAA-coarsens every series with width `coarsen_width` (1 = no coarsening),
/// then fills the upper triangle in parallel and mirrors it.
DistanceMatrix pairwise_dtw(std::span<const std::vector<double>> series, std::size_t coarsen_width);

/// Pairwise DTW on series that are already coarsened.
DistanceMatrix pairwise_dtw_coarse(std::span<const std::vector<double>> coarse);

}  // namespace campaign
