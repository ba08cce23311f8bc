#pragma once

// Serial reference implementations of the parallel kernels. They favour the
// plainest possible formulation and exist for equivalence tests and benchmarks.

#include <span>
#include <vector>

#include "campaign/dtw.hpp"
#include "campaign/features.hpp"
#include "campaign/lexicon.hpp"
#include "campaign/wrapper.hpp"

namespace campaign::reference {

/// window_features applied to each window in turn.
FeatureMatrix extract_matrix(std::span<const TweetRecord> tweets, std::span<const WindowSlice> windows,
                             const Lexicons& lexicons);

/// Full n x n loop over dtw_distance.
DistanceMatrix pairwise_dtw(std::span<const std::vector<double>> coarse);

/// Held-out scores for `plan` obtained by training the public classifiers
/// fold by fold on the named features.
std::vector<double> cv_scores(ClassifierKind kind, const ObservationSet& data, const CvPlan& plan,
                              std::span<const std::size_t> subset, const ScorerParams& params);

}  // namespace campaign::reference
