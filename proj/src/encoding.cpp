#include "campaign/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "campaign/types.hpp"

namespace campaign {

CoarseSeries paa(std::span<const double> series, std::size_t segment_width) {
  if (segment_width == 0 || segment_width > series.size()) {
    throw InvalidArgument("segment width " + std::to_string(segment_width) + " invalid for series of length " +
                          std::to_string(series.size()));
  }
  CoarseSeries out;
  out.source_length = series.size();
  out.segment_width = segment_width;
  out.values.reserve((series.size() + segment_width - 1) / segment_width);
  for (std::size_t begin = 0; begin < series.size(); begin += segment_width) {
    const std::size_t end = std::min(begin + segment_width, series.size());
    double sum = 0;
    for (std::size_t i = begin; i < end; ++i) sum += series[i];
    out.values.push_back(sum / static_cast<double>(end - begin));
  }
  return out;
}

std::vector<double> paa_segments(std::span<const double> series, std::size_t segments) {
  if (segments == 0 || segments > series.size()) {
    throw InvalidArgument("cannot split a series of length " + std::to_string(series.size()) + " into " +
                          std::to_string(segments) + " segments");
  }
  std::vector<double> out(segments);
  const std::size_t n = series.size();
  for (std::size_t s = 0; s < segments; ++s) {
    const std::size_t begin = s * n / segments;
    const std::size_t end = (s + 1) * n / segments;
    double sum = 0;
    for (std::size_t i = begin; i < end; ++i) sum += series[i];
    out[s] = sum / static_cast<double>(end - begin);
  }
  return out;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw InvalidArgument("quantile probability outside [0, 1]");
  }
  // Acklam's rational approximation, then Newton steps on the erfc-based CDF.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                 1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                 6.680131188771972e+01,  -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                 -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  } else if (p <= 1 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  } else {
    const double q = std::sqrt(-2 * std::log(1 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  const double inv_sqrt_2pi = 0.39894228040143267794;
  for (int iter = 0; iter < 3; ++iter) {
    const double err = normal_cdf(x) - p;
    const double pdf = inv_sqrt_2pi * std::exp(-0.5 * x * x);
    if (pdf <= 0) break;
    x -= err / pdf;
  }
  return x;
}

std::vector<double> gaussian_breakpoints(int alphabet_size) {
  if (alphabet_size < 2 || alphabet_size > 64) throw InvalidArgument("alphabet size must be in [2, 64]");
  std::vector<double> cuts(static_cast<std::size_t>(alphabet_size - 1));
  const int half = (alphabet_size - 1) / 2;
  for (int k = 0; k < alphabet_size - 1; ++k) {
    cuts[static_cast<std::size_t>(k)] = normal_quantile(static_cast<double>(k + 1) / alphabet_size);
  }
  // mirror the lower half so the cuts are exactly symmetric about zero
  for (int k = 0; k < half; ++k) {
    cuts[static_cast<std::size_t>(alphabet_size - 2 - k)] = -cuts[static_cast<std::size_t>(k)];
  }
  if (alphabet_size % 2 == 0) cuts[static_cast<std::size_t>(alphabet_size / 2 - 1)] = 0.0;
  return cuts;
}

std::uint32_t SaxWord::code() const {
  std::uint32_t c = 0;
  for (auto l : letters) c = c * static_cast<std::uint32_t>(alphabet_size) + l;
  return c;
}

SaxWord sax_word(std::span<const double> series, std::size_t word_length, int alphabet_size) {
  if (word_length == 0 || series.size() < word_length) {
    throw InvalidArgument("word length must be in [1, series length]");
  }
  const std::vector<double> cuts = gaussian_breakpoints(alphabet_size);

  double mean = 0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(series.size());
  double ss = 0;
  for (double v : series) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(series.size()));

  std::vector<double> z(series.size(), 0.0);
  // relative threshold: a series that is constant up to rounding is constant
  if (sd > 1e-12 * std::max(1.0, std::abs(mean))) {
    for (std::size_t i = 0; i < series.size(); ++i) z[i] = (series[i] - mean) / sd;
  }
  const std::vector<double> segments = paa_segments(z, word_length);

  SaxWord word;
  word.alphabet_size = alphabet_size;
  word.letters.reserve(word_length);
  for (double m : segments) {
    // letter = number of cuts strictly below the value
    const auto letter = std::lower_bound(cuts.begin(), cuts.end(), m) - cuts.begin();
    word.letters.push_back(static_cast<std::uint8_t>(letter));
  }
  return word;
}

}  // namespace campaign
