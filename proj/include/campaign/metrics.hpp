#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "campaign/types.hpp"

namespace campaign {

struct RocPoint {
  double fpr = 0;
  double tpr = 0;
  bool operator==(const RocPoint&) const = default;
};

/// Probability a random promoted score outranks a random organic one, ties 1/2.
/// Throws InvalidArgument unless both classes are present.
double roc_auc(std::span<const double> scores, std::span<const Label> labels);

/// ROC vertices from (0,0) to (1,1), one per distinct score threshold.
std::vector<RocPoint> roc_curve(std::span<const double> scores, std::span<const Label> labels);

struct F1Threshold {
  double threshold = 0;  // predict promoted when score > threshold
  double f1 = 0;
};

/// Sweeps midpoints between consecutive distinct scores plus -inf/+inf; F1
/// ties go to the lower threshold.
F1Threshold best_f1_threshold(std::span<const double> scores, std::span<const Label> labels);

/// Per-instance fold ids in [0, folds). Each class is shuffled with `seed` and
/// dealt round-robin, continuing across classes so fold sizes stay balanced.
std::vector<int> stratified_folds(std::span<const Label> labels, int folds, std::uint64_t seed);

/// Unbiased Fisher-Yates on a 64-bit Mersenne Twister.
void seeded_shuffle(std::span<std::size_t> items, std::uint64_t seed);

}  // namespace campaign
