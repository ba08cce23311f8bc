#include <gtest/gtest.h>

#include <random>

#include "campaign/dtw.hpp"
#include "campaign/encoding.hpp"
#include "campaign/reference.hpp"
#include "helpers.hpp"

namespace campaign {
namespace {

TEST(Dtw, SmallExamples) {
  const std::vector<double> a{1, 2, 3}, b{1, 3};
  EXPECT_DOUBLE_EQ(dtw_distance(a, b), 1.0);
  const std::vector<double> z{0}, t{3};
  EXPECT_DOUBLE_EQ(dtw_distance(z, t), 9.0);
  EXPECT_DOUBLE_EQ(dtw_distance(a, a), 0.0);
  const std::vector<double> stretched{1, 1, 2, 2, 3, 3};
  EXPECT_DOUBLE_EQ(dtw_distance(a, stretched), 0.0);
}

TEST(Dtw, SymmetricAndScratchReuse) {
  std::mt19937_64 g(5);
  std::vector<double> scratch;
  for (int trial = 0; trial < 20; ++trial) {
    auto x = test::random_series(g, 3 + trial % 7);
    auto y = test::random_series(g, 2 + trial % 5);
    const double d = dtw_distance(x, y);
    EXPECT_DOUBLE_EQ(d, dtw_distance(y, x));
    EXPECT_DOUBLE_EQ(d, dtw_distance(x, y, scratch));
    EXPECT_GE(d, 0);
  }
}

TEST(Dtw, EmptyInputRejected) {
  const std::vector<double> a{1}, e;
  EXPECT_THROW(dtw_distance(a, e), InvalidArgument);
}

TEST(Pairwise, ParallelMatchesSerial) {
  std::mt19937_64 g(9);
  std::vector<std::vector<double>> series;
  for (int i = 0; i < 40; ++i) series.push_back(test::random_series(g, 35));
  std::vector<std::vector<double>> coarse;
  for (const auto& s : series) coarse.push_back(paa(s, 5).values);
  const auto serial = reference::pairwise_dtw(coarse);
  EXPECT_EQ(pairwise_dtw_coarse(coarse), serial);
  EXPECT_EQ(pairwise_dtw(series, 5), serial);
  for (std::size_t i = 0; i < serial.size(); ++i) EXPECT_EQ(serial(i, i), 0.0);
}

}  // namespace
}  // namespace campaign
