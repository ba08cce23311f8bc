#include "campaign/dtw.hpp"

#include <algorithm>
#include <limits>

#include "campaign/encoding.hpp"
#include "campaign/types.hpp"

namespace campaign {

double dtw_distance(std::span<const double> x, std::span<const double> y, std::vector<double>& scratch) {
  if (x.empty() || y.empty()) throw InvalidArgument("dtw_distance needs non-empty series");
  const std::size_t m = y.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  // two rolling rows of the cumulative cost table
  scratch.assign(2 * m, inf);
  double* prev = scratch.data();
  double* curr = scratch.data() + m;
  for (std::size_t t = 0; t < x.size(); ++t) {
    for (std::size_t u = 0; u < m; ++u) {
      const double d = x[t] - y[u];
      const double cost = d * d;
      double best;
      if (t == 0 && u == 0) {
        best = 0.0;
      } else {
        const double diag = (t > 0 && u > 0) ? prev[u - 1] : inf;
        const double up = t > 0 ? prev[u] : inf;
        const double left = u > 0 ? curr[u - 1] : inf;
        best = std::min({diag, up, left});
      }
      curr[u] = cost + best;
    }
    std::swap(prev, curr);
  }
  return prev[m - 1];
}

double dtw_distance(std::span<const double> x, std::span<const double> y) {
  std::vector<double> scratch;
  return dtw_distance(x, y, scratch);
}

DistanceMatrix pairwise_dtw_coarse(std::span<const std::vector<double>> coarse) {
  const std::size_t n = coarse.size();
  for (const auto& s : coarse) {
    if (s.empty()) throw InvalidArgument("pairwise_dtw needs non-empty series");
  }
  DistanceMatrix out(n);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
  {
    std::vector<double> scratch;
    // row i costs n - i cells, dynamic scheduling evens out the triangle
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
      const auto r = static_cast<std::size_t>(i);
      for (std::size_t j = r + 1; j < n; ++j) out.set(r, j, dtw_distance(coarse[r], coarse[j], scratch));
    }
  }
  return out;
}

DistanceMatrix pairwise_dtw(std::span<const std::vector<double>> series, std::size_t coarsen_width) {
  if (series.empty()) return DistanceMatrix(0);
  const std::size_t len = series.front().size();
  for (const auto& s : series) {
    if (s.size() != len) throw InvalidArgument("pairwise_dtw: series lengths differ");
  }
  std::vector<std::vector<double>> coarse;
  coarse.reserve(series.size());
  for (const auto& s : series) coarse.push_back(paa(s, coarsen_width).values);
  return pairwise_dtw_coarse(coarse);
}

}  // namespace campaign
