#include <gtest/gtest.h>

#include <atomic>
#include <numeric>

#include "campaign/selection.hpp"
#include "campaign/types.hpp"

namespace campaign {
namespace {

std::vector<std::size_t> candidates(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

TEST(Greedy, PicksDominantFeatureThenStops) {
  // feature 2 alone scores 0.9; anything added to it gains 0.01
  const auto eval = [](std::span<const std::size_t> s) {
    bool has2 = std::find(s.begin(), s.end(), 2) != s.end();
    return (has2 ? 0.9 : 0.55) + 0.01 * static_cast<double>(s.size() - 1);
  };
  const auto r = greedy_forward_select(candidates(6), eval);
  EXPECT_EQ(r.selected, (std::vector<std::size_t>{2}));
  EXPECT_DOUBLE_EQ(r.auc, 0.9);
  EXPECT_EQ(r.rounds, 2u);
  ASSERT_EQ(r.trace.size(), 2u);
  EXPECT_EQ(r.trace[0].feature, 2u);
  EXPECT_NEAR(r.trace[1].auc, 0.91, 1e-12);
}

TEST(Greedy, IdenticalFeaturesSelectExactlyOne) {
  const auto eval = [](std::span<const std::size_t>) { return 0.7; };
  const auto r = greedy_forward_select(candidates(5), eval);
  EXPECT_EQ(r.selected, (std::vector<std::size_t>{0}));
  EXPECT_DOUBLE_EQ(r.auc, 0.7);
}

TEST(Greedy, FirstRoundAlwaysAdds) {
  const auto eval = [](std::span<const std::size_t>) { return 0.3; };
  const auto r = greedy_forward_select(candidates(3), eval);
  EXPECT_EQ(r.selected.size(), 1u);
}

TEST(Greedy, AdditiveGainsRespectCap) {
  // each feature adds 0.06; selection stops at max_selected
  const auto eval = [](std::span<const std::size_t> s) { return 0.5 + 0.06 * static_cast<double>(s.size()); };
  SelectionConfig cfg;
  cfg.max_selected = 3;
  const auto r = greedy_forward_select(candidates(8), eval, cfg);
  EXPECT_EQ(r.selected, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_NEAR(r.auc, 0.68, 1e-12);
}

TEST(Greedy, GainThreshold) {
  const auto eval = [](std::span<const std::size_t> s) { return 0.5 + 0.05 * static_cast<double>(s.size()); };
  SelectionConfig cfg;
  cfg.min_gain = 0.04;
  EXPECT_EQ(greedy_forward_select(candidates(4), eval, cfg).selected.size(), 4u);
  cfg.min_gain = 0.06;
  EXPECT_EQ(greedy_forward_select(candidates(4), eval, cfg).selected.size(), 1u);
}

TEST(Greedy, ExceptionsPropagate) {
  const auto eval = [](std::span<const std::size_t> s) -> double {
    if (s.back() == 1) throw DataError("boom");
    return 0.5;
  };
  EXPECT_THROW(greedy_forward_select(candidates(3), eval), DataError);
}

TEST(Greedy, EvaluationsPerRound) {
  std::atomic<int> calls{0};
  const auto eval = [&](std::span<const std::size_t> s) {
    ++calls;
    return 0.5 + 0.1 * static_cast<double>(s.size());
  };
  SelectionConfig cfg;
  cfg.max_selected = 2;
  greedy_forward_select(candidates(5), eval, cfg);
  EXPECT_EQ(calls.load(), 5 + 4);
}

}  // namespace
}  // namespace campaign
