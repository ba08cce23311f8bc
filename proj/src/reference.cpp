#include "campaign/reference.hpp"

#include "campaign/json_io.hpp"

namespace campaign::reference {

FeatureMatrix extract_matrix(std::span<const TweetRecord> tweets, std::span<const WindowSlice> windows,
                             const Lexicons& lexicons) {
  FeatureMatrix m(kFeatureCount, windows.size());
  std::vector<TweetRecord> records;
  for (std::size_t w = 0; w < windows.size(); ++w) {
    records.clear();
    for (auto i : windows[w].tweet_indices) records.push_back(tweets[i]);
    m.set_column(w, window_features(records, lexicons));
  }
  return m;
}

DistanceMatrix pairwise_dtw(std::span<const std::vector<double>> coarse) {
  DistanceMatrix d(coarse.size());
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    for (std::size_t j = i + 1; j < coarse.size(); ++j) d.set(i, j, dtw_distance(coarse[i], coarse[j]));
  }
  return d;
}

std::vector<double> cv_scores(ClassifierKind kind, const ObservationSet& data, const CvPlan& plan,
                              std::span<const std::size_t> subset, const ScorerParams& params) {
  std::vector<std::string> names;
  for (auto f : subset) names.push_back(data.feature_names.at(f));
  std::vector<double> out(plan.members.size());
  for (int g = 0; g < plan.folds; ++g) {
    std::vector<TrainingTrend> train;
    for (std::size_t m = 0; m < plan.members.size(); ++m) {
      if (plan.fold_of[m] == g) continue;
      const auto i = plan.members[m];
      train.push_back({data.hashtags[i], data.labels[i], data.instance_series(i, subset)});
    }
    TrainedKnnDtw dtw_model;
    WordBags bags;
    FlatKnnModel flat_model;
    switch (kind) {
      case ClassifierKind::knn_dtw: dtw_model = train_knn_dtw(train, names, params.k, params.coarsen_width); break;
      case ClassifierKind::sax_vsm: bags = sax_vsm_train(train, names, params.word_length, params.alphabet_size); break;
      case ClassifierKind::knn_flat: flat_model = train_knn_flat(train, names, params.k); break;
    }
    for (std::size_t m = 0; m < plan.members.size(); ++m) {
      if (plan.fold_of[m] != g) continue;
      const auto i = plan.members[m];
      const auto query = data.instance_series(i, subset);
      switch (kind) {
        case ClassifierKind::knn_dtw: out[m] = knn_dtw_score(query, dtw_model); break;
        case ClassifierKind::sax_vsm:
          out[m] = is_promoted(sax_vsm_classify(query, bags, derive_seed(params.seed, data.hashtags[i]))) ? 1.0 : 0.0;
          break;
        case ClassifierKind::knn_flat: out[m] = knn_flat_score(query, flat_model); break;
      }
    }
  }
  return out;
}

}  // namespace campaign::reference
