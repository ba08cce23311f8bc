#include "campaign/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace campaign {
namespace {

void check_inputs(std::span<const double> scores, std::span<const Label> labels) {
  if (scores.size() != labels.size()) throw InvalidArgument("scores and labels differ in length");
  const auto pos = std::count(labels.begin(), labels.end(), Label::promoted);
  if (pos == 0 || pos == static_cast<std::ptrdiff_t>(labels.size())) {
    throw InvalidArgument("both classes must be present");
  }
}

std::vector<std::size_t> order_by_score_desc(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace

double roc_auc(std::span<const double> scores, std::span<const Label> labels) {
  check_inputs(scores, labels);
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  // Mann-Whitney U with mid-ranks; ranks are half-integers so sums stay exact
  double pos_rank_sum = 0;
  std::size_t n_pos = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    const double mid_rank = 0.5 * static_cast<double>(i + 1 + j);  // mean of ranks i+1..j
    for (std::size_t k = i; k < j; ++k) {
      if (is_promoted(labels[order[k]])) {
        pos_rank_sum += mid_rank;
        ++n_pos;
      }
    }
    i = j;
  }
  const double n_p = static_cast<double>(n_pos);
  const double n_n = static_cast<double>(labels.size() - n_pos);
  return (pos_rank_sum - n_p * (n_p + 1) / 2) / (n_p * n_n);
}

std::vector<RocPoint> roc_curve(std::span<const double> scores, std::span<const Label> labels) {
  check_inputs(scores, labels);
  const auto order = order_by_score_desc(scores);
  const auto n_pos = static_cast<double>(std::count(labels.begin(), labels.end(), Label::promoted));
  const double n_neg = static_cast<double>(labels.size()) - n_pos;
  std::vector<RocPoint> points{{0.0, 0.0}};
  double tp = 0, fp = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) {
      (is_promoted(labels[order[j]]) ? tp : fp) += 1;
      ++j;
    }
    points.push_back({fp / n_neg, tp / n_pos});
    i = j;
  }
  return points;
}

F1Threshold best_f1_threshold(std::span<const double> scores, std::span<const Label> labels) {
  check_inputs(scores, labels);
  std::vector<double> distinct(scores.begin(), scores.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<double> candidates;
  candidates.reserve(distinct.size() + 1);
  candidates.push_back(-std::numeric_limits<double>::infinity());
  for (std::size_t i = 1; i < distinct.size(); ++i) candidates.push_back(0.5 * (distinct[i - 1] + distinct[i]));
  candidates.push_back(std::numeric_limits<double>::infinity());

  // sweep ascending thresholds; strict > keeps the lowest threshold on ties
  const auto order = order_by_score_desc(scores);
  double tp = 0, fp = 0;
  const auto n_pos = static_cast<double>(std::count(labels.begin(), labels.end(), Label::promoted));
  // start with everything predicted promoted (threshold -inf)
  for (auto l : labels) (is_promoted(l) ? tp : fp) += 1;
  std::size_t cursor = order.size();  // instances at order[cursor..] are below threshold
  F1Threshold best{candidates.front(), -1.0};
  for (double thr : candidates) {
    while (cursor > 0 && !(scores[order[cursor - 1]] > thr)) {
      --cursor;
      (is_promoted(labels[order[cursor]]) ? tp : fp) -= 1;
    }
    const double fn = n_pos - tp;
    const double f1 = tp > 0 ? 2 * tp / (2 * tp + fp + fn) : 0.0;
    if (f1 > best.f1) best = {thr, f1};
  }
  return best;
}

void seeded_shuffle(std::span<std::size_t> items, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    // rejection sampling keeps the draw uniform on [0, i)
    const std::uint64_t bound = i;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
      r = gen();
    } while (r >= limit);
    std::swap(items[i - 1], items[r % bound]);
  }
}

std::vector<int> stratified_folds(std::span<const Label> labels, int folds, std::uint64_t seed) {
  if (folds < 2) throw InvalidArgument("need at least 2 folds");
  std::vector<std::size_t> promoted, organic;
  for (std::size_t i = 0; i < labels.size(); ++i) (is_promoted(labels[i]) ? promoted : organic).push_back(i);
  if (promoted.size() < static_cast<std::size_t>(folds) || organic.size() < static_cast<std::size_t>(folds)) {
    throw InvalidArgument("each class needs at least " + std::to_string(folds) + " instances for " +
                          std::to_string(folds) + "-fold stratification");
  }
  seeded_shuffle(promoted, seed);
  seeded_shuffle(organic, seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<int> assignment(labels.size(), -1);
  std::size_t next = 0;
  for (auto* group : {&promoted, &organic}) {
    for (auto idx : *group) assignment[idx] = static_cast<int>(next++ % static_cast<std::size_t>(folds));
  }
  return assignment;
}

}  // namespace campaign
