#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "campaign/metrics.hpp"

namespace campaign {
namespace {

constexpr Label P = Label::promoted;
constexpr Label O = Label::organic;

TEST(Auc, SmallExample) {
  const std::vector<double> s{0.9, 0.4, 0.6, 0.2};
  const std::vector<Label> l{P, P, O, O};
  EXPECT_DOUBLE_EQ(roc_auc(s, l), 0.75);
}

TEST(Auc, TiesCountHalf) {
  const std::vector<double> s{0.5, 0.5, 0.5, 0.5};
  const std::vector<Label> l{P, O, P, O};
  EXPECT_DOUBLE_EQ(roc_auc(s, l), 0.5);
}

TEST(Auc, RequiresBothClasses) {
  const std::vector<double> s{0.1, 0.2};
  const std::vector<Label> l{P, P};
  EXPECT_THROW(roc_auc(s, l), InvalidArgument);
}

TEST(Roc, VerticesAndTrapezoidArea) {
  const std::vector<double> s{0.9, 0.4, 0.6, 0.2, 0.6};
  const std::vector<Label> l{P, P, O, O, P};
  const auto pts = roc_curve(s, l);
  ASSERT_GE(pts.size(), 2u);
  EXPECT_EQ(pts.front(), (RocPoint{0, 0}));
  EXPECT_EQ(pts.back(), (RocPoint{1, 1}));
  double area = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    EXPECT_GE(pts[i].fpr, pts[i - 1].fpr);
    EXPECT_GE(pts[i].tpr, pts[i - 1].tpr);
    area += (pts[i].fpr - pts[i - 1].fpr) * (pts[i].tpr + pts[i - 1].tpr) / 2;
  }
  EXPECT_NEAR(area, roc_auc(s, l), 1e-12);
  // one vertex per distinct score plus the origin
  EXPECT_EQ(pts.size(), 5u);
}

TEST(F1, SmallExample) {
  const std::vector<double> s{0.9, 0.8, 0.3, 0.1};
  const std::vector<Label> l{P, O, P, O};
  const auto best = best_f1_threshold(s, l);
  // predicting everything above 0.2 gives 2 tp, 1 fp, 0 fn
  EXPECT_NEAR(best.f1, 0.8, 1e-12);
  EXPECT_DOUBLE_EQ(best.threshold, 0.2);
}

TEST(F1, TiesGoToLowerThreshold) {
  // thresholds 0.15 and 0.45 both reach F1 = 2/3
  const std::vector<double> s{0.1, 0.2, 0.3, 0.4, 0.5};
  const std::vector<Label> l{O, P, O, O, P};
  const auto best = best_f1_threshold(s, l);
  EXPECT_NEAR(best.f1, 2.0 / 3, 1e-12);
  EXPECT_DOUBLE_EQ(best.threshold, 0.15);
}

TEST(F1, MinusInfinityWhenEverythingPromoted) {
  const std::vector<double> s{0.2, 0.4, 0.6, 0.8};
  const std::vector<Label> l{P, O, P, O};
  const auto best = best_f1_threshold(s, l);
  EXPECT_NEAR(best.f1, 2.0 / 3, 1e-12);
  EXPECT_EQ(best.threshold, -INFINITY);
}

TEST(Folds, StratifiedSizes) {
  std::vector<Label> labels(75, P);
  labels.resize(852, O);
  const auto f = stratified_folds(labels, 10, 42);
  ASSERT_EQ(f.size(), labels.size());
  std::vector<int> total(10), promoted(10);
  for (std::size_t i = 0; i < f.size(); ++i) {
    ASSERT_GE(f[i], 0);
    ASSERT_LT(f[i], 10);
    ++total[f[i]];
    if (labels[i] == P) ++promoted[f[i]];
  }
  for (int k = 0; k < 10; ++k) {
    EXPECT_GE(promoted[k], 7);
    EXPECT_LE(promoted[k], 8);
    EXPECT_GE(total[k], 85);
    EXPECT_LE(total[k], 86);
  }
  EXPECT_EQ(f, stratified_folds(labels, 10, 42));
  EXPECT_NE(f, stratified_folds(labels, 10, 43));
}

TEST(Folds, TwentyInstances) {
  std::vector<Label> labels(4, P);
  labels.resize(20, O);
  const auto f = stratified_folds(labels, 4, 1);
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(std::count(f.begin(), f.end(), k), 5);
    int p = 0;
    for (std::size_t i = 0; i < 4; ++i) p += f[i] == k;
    EXPECT_EQ(p, 1);
  }
}

TEST(Folds, TooFewPerClass) {
  const std::vector<Label> labels{P, P, O, O, O, O};
  EXPECT_THROW(stratified_folds(labels, 3, 0), InvalidArgument);
}

TEST(Shuffle, PermutationAndDeterminism) {
  std::vector<std::size_t> a(50);
  std::iota(a.begin(), a.end(), 0);
  auto b = a;
  seeded_shuffle(a, 7);
  seeded_shuffle(b, 7);
  EXPECT_EQ(a, b);
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], i);
}

}  // namespace
}  // namespace campaign
