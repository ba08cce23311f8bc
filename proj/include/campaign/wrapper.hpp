#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "campaign/classify.hpp"
#include "campaign/features.hpp"
#include "campaign/ingest.hpp"
#include "campaign/types.hpp"

namespace campaign {

/// A trend's identity plus its full feature x time matrix.
struct TrendMatrix {
  TrendRecord trend;
  FeatureMatrix matrix;
};

/// Observation slices of every candidate feature for every trend:
/// values[(instance * features + feature) * length + t].
struct ObservationSet {
  std::vector<std::string> hashtags;
  std::vector<Label> labels;
  std::vector<std::string> feature_names;
  std::size_t length = 0;
  std::vector<double> values;

  std::size_t size() const { return labels.size(); }
  std::size_t feature_count() const { return feature_names.size(); }
  std::span<const double> series(std::size_t instance, std::size_t feature) const {
    return {values.data() + (instance * feature_count() + feature) * length, length};
  }
  /// Series of the given features for one instance, keyed by name.
  FeatureSeries instance_series(std::size_t instance, std::span<const std::size_t> features) const;
};

/// Slices [d - L + 1, d] from each trend's matrix rows, where d is the end
/// index for `delay_minutes` plus the trend's shift (clamped into range).
/// `rows` selects matrix rows (empty = all registry features).
ObservationSet observe(std::span<const TrendMatrix> corpus, int delay_minutes, int length,
                       const WindowingConfig& windowing, std::span<const int> shifts = {},
                       std::span<const std::size_t> rows = {});

/// Cross-validation layout over a subset of instances.
struct CvPlan {
  std::vector<std::size_t> members;  // instance indices into the ObservationSet
  std::vector<int> fold_of;          // aligned with members
  int folds = 0;
};

CvPlan make_plan(std::span<const Label> all_labels, std::span<const std::size_t> members, int folds,
                 std::uint64_t seed);

struct ScorerParams {
  int k = kDefaultNeighbors;
  std::size_t coarsen_width = kDefaultCoarsenWidth;
  std::size_t word_length = kDefaultWordLength;
  int alphabet_size = kDefaultAlphabetSize;
  std::uint64_t seed = 0;  // SAX-VSM tie-break streams, derived per hashtag
};

/// Held-out class scores for a feature subset under a registered plan.
/// Implementations precompute per-feature state at construction; cv_scores
/// is const and safe to call concurrently.
class SubsetScorer {
 public:
  virtual ~SubsetScorer() = default;
  /// Scores aligned with plans()[plan].members.
  virtual std::vector<double> cv_scores(std::size_t plan, std::span<const std::size_t> subset) const = 0;
  const std::vector<CvPlan>& plans() const { return plans_; }

 protected:
  SubsetScorer(const ObservationSet& data, std::vector<CvPlan> plans, ScorerParams params)
      : data_(data), plans_(std::move(plans)), params_(params) {}
  const ObservationSet& data_;
  std::vector<CvPlan> plans_;
  ScorerParams params_;
};

std::unique_ptr<SubsetScorer> make_scorer(ClassifierKind kind, const ObservationSet& data,
                                          std::vector<CvPlan> plans, const ScorerParams& params);

/// Per-fold AUC of held-out scores, and their mean.
struct FoldAuc {
  std::vector<double> per_fold;
  double mean = 0;
  double std_error = 0;
};
FoldAuc fold_auc(const CvPlan& plan, std::span<const Label> all_labels, std::span<const double> scores);

/// Per-feature, per-member KNN-DTW neighbor fractions for one plan; the
/// parallel kernel behind the KNN-DTW scorer, exposed for benchmarking.
std::vector<double> knn_dtw_feature_fractions(const ObservationSet& data, std::size_t feature,
                                              std::span<const CvPlan> plans, const ScorerParams& params);

}  // namespace campaign
