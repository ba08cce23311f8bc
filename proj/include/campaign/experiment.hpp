#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "campaign/classify.hpp"
#include "campaign/ingest.hpp"
#include "campaign/json_io.hpp"
#include "campaign/lexicon.hpp"
#include "campaign/metrics.hpp"
#include "campaign/selection.hpp"
#include "campaign/wrapper.hpp"

namespace campaign {

struct ExperimentConfig {
  int delay_minutes = 0;
  int length = 35;
  ClassifierKind classifier = ClassifierKind::knn_dtw;
  int folds = 10;
  std::uint64_t seed = 0;
  double min_auc_gain = 0.05;
  std::size_t max_selected = 10;
  std::vector<double> shift_sigmas{0, 1, 2, 4, 8};
  bool nested = false;
  /// Candidate feature names; empty means the whole registry.
  std::vector<std::string> candidates;
  ScorerParams scorer;  // seed is overwritten from `seed`
  WindowingConfig windowing;

  void validate() const;
};

Json to_json(const ExperimentConfig& config);
/// Missing keys keep their defaults; unknown keys are rejected.
ExperimentConfig experiment_config_from_json(const Json& j);

struct InstanceScore {
  double score = 0;
  Label label = Label::organic;
  int fold = 0;
  bool operator==(const InstanceScore&) const = default;
};

struct NamedStep {
  std::string feature;
  double auc = 0;
  bool operator==(const NamedStep&) const = default;
};

struct EvaluationReport {
  std::string classifier;
  int delay_minutes = 0;
  int length = 0;
  int folds = 0;
  std::uint64_t seed = 0;
  bool nested = false;
  double mean_auc = 0;
  double auc_std_error = 0;
  std::vector<double> per_fold_auc;
  std::vector<RocPoint> roc_points;
  double best_threshold = 0;
  double best_f1 = 0;
  std::map<std::string, InstanceScore> per_instance_scores;
  std::vector<std::string> misclassified;  // at best_threshold
  /// Selected features, one list per fold in nested mode, else a single list.
  std::vector<std::vector<std::string>> selected_features;
  std::vector<std::vector<NamedStep>> selection_trace;
};

Json to_json(const EvaluationReport& report);
EvaluationReport evaluation_report_from_json(const Json& j);
/// "fpr,tpr" header then one vertex per line.
std::string roc_csv(const EvaluationReport& report);

/// CV on a fixed feature subset (indices into data.feature_names).
EvaluationReport cross_validate(const ObservationSet& data, std::span<const std::size_t> features,
                                const ExperimentConfig& config);

struct FeatureSelection {
  std::vector<std::string> selected;
  std::vector<NamedStep> trace;
  double auc = 0.5;
};

Json to_json(const FeatureSelection& selection);

/// Greedy selection scored by CV-mean AUC over the whole corpus.
FeatureSelection select_features(std::span<const TrendMatrix> corpus, const ExperimentConfig& config,
                                 std::span<const int> shifts = {});

/// Selection then CV at config.delay_minutes; per-trend window shifts optional.
EvaluationReport run_experiment(std::span<const TrendMatrix> corpus, const ExperimentConfig& config,
                                std::span<const int> shifts = {});

std::map<int, EvaluationReport> delay_sweep(std::span<const TrendMatrix> corpus, std::span<const int> delays,
                                            const ExperimentConfig& config);

/// Per-trend shifts: round(N(0, sigma^2)) steps from a generator seeded by (seed, hashtag).
std::vector<int> draw_shifts(std::span<const TrendMatrix> corpus, double sigma, std::uint64_t seed);

std::map<double, EvaluationReport> shift_experiment(std::span<const TrendMatrix> corpus,
                                                    std::span<const double> sigmas, const ExperimentConfig& config);

// ---------------------------------------------------------------- corpora on disk

/// Corpus layout: manifest.jsonl plus tweets/<hashtag>.jsonl per trend.
std::filesystem::path tweet_file(const std::filesystem::path& corpus_dir, std::string_view hashtag);

/// Ingests and extracts every trend of a corpus directory.
std::vector<TrendMatrix> extract_corpus(const std::filesystem::path& corpus_dir, const Lexicons& lexicons,
                                        const WindowingConfig& windowing = {});

Json to_json(const TrendMatrix& m);
TrendMatrix trend_matrix_from_json(const Json& j);
/// Reads every <hashtag>.json matrix document in a directory, ordered by file name.
std::vector<TrendMatrix> load_matrices(const std::filesystem::path& dir);

}  // namespace campaign
