#include "campaign/selection.hpp"

#include <algorithm>
#include <exception>

#include "campaign/types.hpp"

namespace campaign {

SelectionResult greedy_forward_select(std::span<const std::size_t> candidates, const SubsetEvaluator& evaluate,
                                      const SelectionConfig& config) {
  if (config.max_selected == 0) throw InvalidArgument("max_selected must be positive");
  SelectionResult result;
  std::vector<std::size_t> remaining(candidates.begin(), candidates.end());
  std::vector<double> scores;

  while (!remaining.empty() && result.selected.size() < config.max_selected) {
    ++result.rounds;
    scores.assign(remaining.size(), 0.0);
    std::exception_ptr failure;
    const auto n = static_cast<std::ptrdiff_t>(remaining.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t c = 0; c < n; ++c) {
      try {
        std::vector<std::size_t> trial = result.selected;
        trial.push_back(remaining[static_cast<std::size_t>(c)]);
        scores[static_cast<std::size_t>(c)] = evaluate(trial);
      } catch (...) {
#pragma omp critical(selection_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    std::size_t best = 0;
    for (std::size_t c = 1; c < remaining.size(); ++c) {
      if (scores[c] > scores[best]) best = c;
    }
    result.trace.push_back({remaining[best], scores[best]});
    if (!result.selected.empty() && scores[best] - result.auc < config.min_gain) break;
    result.selected.push_back(remaining[best]);
    result.auc = scores[best];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return result;
}

}  // namespace campaign
