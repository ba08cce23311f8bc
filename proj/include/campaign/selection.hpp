#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace campaign {

struct SelectionConfig {
  double min_gain = 0.05;
  std::size_t max_selected = 10;
};

struct SelectionStep {
  std::size_t feature = 0;
  double auc = 0;
};

struct SelectionResult {
  std::vector<std::size_t> selected;  // in order of addition
  std::vector<SelectionStep> trace;   // best candidate of each round, including the rejected last one
  std::size_t rounds = 0;
  double auc = 0.5;                   // score of `selected`
};

/// Scores a candidate subset; must be safe to call concurrently.
using SubsetEvaluator = std::function<double(std::span<const std::size_t>)>;

/// Greedy forward selection over `candidates` (in registry order). Each round
/// adds the best-scoring candidate; from the second round on it stops when
/// the gain is below min_gain. Equal scores go to the earlier candidate.
SelectionResult greedy_forward_select(std::span<const std::size_t> candidates, const SubsetEvaluator& evaluate,
                                      const SelectionConfig& config = {});

}  // namespace campaign
