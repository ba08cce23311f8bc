#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "campaign/stats.hpp"

namespace campaign {
namespace {

TEST(Summary, FrozenValuesOneToFive) {
  const std::vector<double> v{5, 3, 1, 4, 2};
  const auto s = summarize8(v);
  EXPECT_DOUBLE_EQ(s.min, 1);
  EXPECT_DOUBLE_EQ(s.max, 5);
  EXPECT_DOUBLE_EQ(s.median, 3);
  EXPECT_DOUBLE_EQ(s.mean, 3);
  EXPECT_NEAR(s.std_dev, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s.skewness, 0.0, 1e-12);
  EXPECT_NEAR(s.kurtosis, 1.7, 1e-12);
  // five occupied bins of twenty
  EXPECT_NEAR(s.entropy, std::log(5.0), 1e-12);
}

TEST(Summary, EvenMedianAveragesMiddlePair) {
  const std::vector<double> v{4, 1, 3, 2};
  EXPECT_DOUBLE_EQ(summarize8(v).median, 2.5);
}

TEST(Summary, EmptyIsAllZero) {
  EXPECT_EQ(summarize8({}), DistributionSummary{});
}

TEST(Summary, ConstantHasZeroShapeStatistics) {
  const std::vector<double> v(7, 4.2);
  const auto s = summarize8(v);
  EXPECT_DOUBLE_EQ(s.min, 4.2);
  EXPECT_DOUBLE_EQ(s.max, 4.2);
  EXPECT_DOUBLE_EQ(s.mean, 4.2);
  EXPECT_EQ(s.std_dev, 0);
  EXPECT_EQ(s.skewness, 0);
  EXPECT_EQ(s.kurtosis, 0);
  EXPECT_EQ(s.entropy, 0);
}

TEST(Summary, SkewSign) {
  const std::vector<double> right{0, 0, 0, 0, 10};
  EXPECT_GT(summarize8(right).skewness, 0);
  const std::vector<double> left{0, 10, 10, 10, 10};
  EXPECT_LT(summarize8(left).skewness, 0);
}

TEST(Summary, InplaceMatchesCopying) {
  std::vector<double> v{3, 9, -1, 4, 4, 0.5};
  const auto expected = summarize8(v);
  EXPECT_EQ(summarize8_inplace(v), expected);
}

TEST(Entropy, Categorical) {
  const std::vector<std::int64_t> c{1, 2, 3};
  EXPECT_NEAR(categorical_entropy(c), 1.0114042647073518, 1e-12);
  const std::vector<std::int64_t> zeros{0, 5, 0};
  EXPECT_EQ(categorical_entropy(zeros), 0);
  EXPECT_EQ(categorical_entropy({}), 0);
}

TEST(Entropy, Histogram) {
  const std::vector<double> v{1, 1, 2, 2, 2, 2};
  EXPECT_NEAR(shannon_entropy(v, 2), 0.6365141682948128, 1e-12);
  const std::vector<double> flat{3, 3, 3};
  EXPECT_EQ(shannon_entropy(flat), 0);
  EXPECT_EQ(shannon_entropy({}), 0);
}

}  // namespace
}  // namespace campaign
