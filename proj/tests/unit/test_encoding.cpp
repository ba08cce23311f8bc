#include <gtest/gtest.h>

#include <cmath>

#include "campaign/encoding.hpp"
#include "campaign/types.hpp"

namespace campaign {
namespace {

TEST(Paa, WidthFiveOnThirtyFive) {
  std::vector<double> s(35);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<double>(i);
  const auto c = paa(s, 5);
  ASSERT_EQ(c.segment_count(), 7u);
  EXPECT_EQ(c.source_length, 35u);
  for (std::size_t k = 0; k < 7; ++k) EXPECT_DOUBLE_EQ(c.values[k], 5.0 * k + 2);
}

TEST(Paa, PartialTrailingSegment) {
  const std::vector<double> s{1, 1, 4, 4, 9};
  const auto c = paa(s, 2);
  EXPECT_EQ(c.values, (std::vector<double>{1, 4, 9}));
  EXPECT_EQ(paa(s, 1).values, s);
  EXPECT_THROW(paa(s, 0), InvalidArgument);
}

TEST(Paa, ExactSegments) {
  const std::vector<double> s{1, 2, 3, 4, 5, 6, 7};
  // boundaries floor(7i/3) = 0, 2, 4, 7
  EXPECT_EQ(paa_segments(s, 3), (std::vector<double>{1.5, 3.5, 6}));
}

TEST(Normal, QuantileInvertsCdf) {
  for (double p : {1e-6, 0.01, 0.2, 0.5, 0.77, 0.999}) EXPECT_NEAR(normal_cdf(normal_quantile(p)), p, 1e-12);
  EXPECT_NEAR(normal_quantile(0.975), 1.959963984540054, 1e-9);
}

TEST(Breakpoints, FiveLetters) {
  const auto b = gaussian_breakpoints(5);
  ASSERT_EQ(b.size(), 4u);
  EXPECT_NEAR(b[0], -0.8416212335729143, 1e-9);
  EXPECT_NEAR(b[1], -0.2533471031357997, 1e-9);
  EXPECT_NEAR(b[2], 0.2533471031357997, 1e-9);
  EXPECT_NEAR(b[3], 0.8416212335729143, 1e-9);
}

TEST(Sax, RampMapsAcrossAlphabet) {
  std::vector<double> ramp(35);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = static_cast<double>(i);
  const auto w = sax_word(ramp, 4, 5);
  EXPECT_EQ(w.letters, (std::vector<std::uint8_t>{0, 1, 3, 4}));
  EXPECT_EQ(w.code(), 0u * 125 + 1 * 25 + 3 * 5 + 4);
}

TEST(Sax, ScaleAndOffsetInvariant) {
  const std::vector<double> a{3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8};
  std::vector<double> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[i] = 100 + 7 * a[i];
  EXPECT_EQ(sax_word(a, 4, 5), sax_word(b, 4, 5));
}

TEST(Sax, ConstantSeriesIsMiddleLetter) {
  const std::vector<double> flat(35, 12.5);
  EXPECT_EQ(sax_word(flat, 4, 5).letters, (std::vector<std::uint8_t>(4, 2)));
}

}  // namespace
}  // namespace campaign
