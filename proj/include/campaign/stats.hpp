#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace campaign {

/// Eight-number fingerprint of a sample. Kurtosis is the raw ratio m4/m2^2,
/// not excess kurtosis; entropy is in nats over a 20-bin histogram.
struct DistributionSummary {
  double min = 0;
  double max = 0;
  double median = 0;
  double mean = 0;
  double std_dev = 0;
  double skewness = 0;
  double kurtosis = 0;
  double entropy = 0;

  std::array<double, 8> as_array() const {
    return {min, max, median, mean, std_dev, skewness, kurtosis, entropy};
  }
  bool operator==(const DistributionSummary&) const = default;
};

/// Suffixes used in feature identifiers, in as_array() order.
inline constexpr std::array<std::string_view, 8> kSummaryStatNames = {
    "min", "max", "median", "mean", "std", "skewness", "kurtosis", "entropy"};

inline constexpr int kDefaultEntropyBins = 20;

/// Population moments. Empty input gives all zeros.
DistributionSummary summarize8(std::span<const double> values);

/// Same as summarize8 but may reorder `scratch` in place (avoids a copy).
DistributionSummary summarize8_inplace(std::span<double> scratch);

/// Equal-width histogram entropy over [min, max], nats.
double shannon_entropy(std::span<const double> values, int bins = kDefaultEntropyBins);

/// -sum p ln p over the positive counts.
double categorical_entropy(std::span<const std::int64_t> counts);

}  // namespace campaign
