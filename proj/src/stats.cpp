#include "campaign/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "campaign/types.hpp"

namespace campaign {
namespace {

double entropy_with_range(std::span<const double> values, int bins, double lo, double hi) {
  if (values.empty() || !(hi > lo)) return 0.0;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(bins), 0);
  const double width = (hi - lo) / bins;
  for (double v : values) {
    auto b = static_cast<std::ptrdiff_t>((v - lo) / width);
    b = std::clamp<std::ptrdiff_t>(b, 0, bins - 1);  // v == hi lands in the last bin
    ++counts[static_cast<std::size_t>(b)];
  }
  return categorical_entropy(counts);
}

}  // namespace

double categorical_entropy(std::span<const std::int64_t> counts) {
  double total = 0;
  for (auto c : counts) {
    if (c > 0) total += static_cast<double>(c);
  }
  if (total <= 0) return 0.0;
  double h = 0;
  for (auto c : counts) {
    if (c <= 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log(p);
  }
  return h > 0 ? h : 0.0;  // single category yields -0.0
}

double shannon_entropy(std::span<const double> values, int bins) {
  if (bins < 1) throw InvalidArgument("entropy needs at least one bin");
  if (values.empty()) return 0.0;
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return entropy_with_range(values, bins, *lo, *hi);
}

DistributionSummary summarize8_inplace(std::span<double> v) {
  DistributionSummary s;
  const std::size_t n = v.size();
  if (n == 0) return s;

  double sum = 0;
  for (double x : v) sum += x;
  const double mean = sum / static_cast<double>(n);
  double m2 = 0, m3 = 0, m4 = 0;
  for (double x : v) {
    const double d = x - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= static_cast<double>(n);
  m3 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);

  std::sort(v.begin(), v.end());
  s.min = v.front();
  s.max = v.back();
  s.median = n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  s.mean = mean;
  if (s.max > s.min && m2 > 0) {
    s.std_dev = std::sqrt(m2);
    s.skewness = m3 / (m2 * s.std_dev);
    s.kurtosis = m4 / (m2 * m2);
    s.entropy = entropy_with_range(v, kDefaultEntropyBins, s.min, s.max);
  }
  return s;
}

DistributionSummary summarize8(std::span<const double> values) {
  std::vector<double> scratch(values.begin(), values.end());
  return summarize8_inplace(scratch);
}

}  // namespace campaign
