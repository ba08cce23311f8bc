#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "campaign/json_io.hpp"
#include "campaign/types.hpp"

namespace campaign {

enum class ClassifierKind { knn_dtw, sax_vsm, knn_flat };

std::string_view to_string(ClassifierKind kind);
ClassifierKind parse_classifier(std::string_view text);

/// Observation series keyed by feature identifier.
using FeatureSeries = std::map<std::string, std::vector<double>>;

struct TrainingTrend {
  std::string hashtag;
  Label label = Label::organic;
  FeatureSeries series;
};

inline constexpr int kDefaultNeighbors = 5;
inline constexpr std::size_t kDefaultCoarsenWidth = 5;
inline constexpr std::size_t kDefaultWordLength = 4;
inline constexpr int kDefaultAlphabetSize = 5;

/// Fraction of promoted labels among the k smallest distances. Equal
/// distances are ordered by training index.
double nearest_promoted_fraction(std::span<const double> distances, std::span<const Label> labels, int k);

/// Same, over the subset `candidates` of a distance row (indices into labels).
double nearest_promoted_fraction(std::span<const double> distance_row, std::span<const std::size_t> candidates,
                                 std::span<const Label> labels, int k);

// ---------------------------------------------------------------- KNN-DTW

struct TrainedKnnDtw {
  std::vector<std::string> features;
  std::vector<std::string> hashtags;
  std::vector<Label> labels;
  std::vector<std::vector<std::vector<double>>> coarse;  // [feature][trend]
  int k = kDefaultNeighbors;
  std::size_t coarsen_width = kDefaultCoarsenWidth;
};

TrainedKnnDtw train_knn_dtw(std::span<const TrainingTrend> trends, std::span<const std::string> features,
                            int k = kDefaultNeighbors, std::size_t coarsen_width = kDefaultCoarsenWidth);

/// Mean over features of the promoted fraction among the k DTW-nearest trends.
double knn_dtw_score(const FeatureSeries& query, const TrainedKnnDtw& model);

// ---------------------------------------------------------------- SAX-VSM

struct WordBags {
  std::vector<std::string> features;
  std::vector<std::unordered_set<std::uint32_t>> promoted;  // per feature, SaxWord codes
  std::vector<std::unordered_set<std::uint32_t>> organic;
  std::size_t word_length = kDefaultWordLength;
  int alphabet_size = kDefaultAlphabetSize;
};

struct WordVotes {
  int promoted = 0;
  int organic = 0;
};

WordBags sax_vsm_train(std::span<const TrainingTrend> trends, std::span<const std::string> features,
                       std::size_t word_length = kDefaultWordLength, int alphabet_size = kDefaultAlphabetSize);

/// One vote per feature for each class whose bag holds the query word.
WordVotes sax_vsm_votes(const FeatureSeries& query, const WordBags& bags);

/// Uniform coin from a generator seeded with `seed`.
Label tie_break(std::uint64_t seed);

/// Majority of word matches; equal counts resolved by tie_break(rng_seed).
Label sax_vsm_classify(const FeatureSeries& query, const WordBags& bags, std::uint64_t rng_seed);

// ---------------------------------------------------------------- flat KNN

struct FlatKnnModel {
  std::vector<std::string> features;
  std::vector<std::string> hashtags;
  std::vector<Label> labels;
  std::vector<std::vector<double>> vectors;  // concatenated in `features` order
  int k = kDefaultNeighbors;
};

FlatKnnModel train_knn_flat(std::span<const TrainingTrend> trends, std::span<const std::string> features,
                            int k = kDefaultNeighbors);

/// Concatenates the query's series in model feature order.
std::vector<double> concatenate(const FeatureSeries& query, std::span<const std::string> features);

/// Fraction promoted among the k Euclidean-nearest raw concatenated vectors.
double knn_flat_score(const FeatureSeries& query, const FlatKnnModel& model);
double knn_flat_score(const FeatureSeries& query, std::span<const TrainingTrend> training,
                      std::span<const std::string> features, int k = kDefaultNeighbors);

// ---------------------------------------------------------------- persistence

Json to_json(const TrainedKnnDtw& model);
Json to_json(const WordBags& bags);
Json to_json(const FlatKnnModel& model);
TrainedKnnDtw knn_dtw_from_json(const Json& j);
WordBags word_bags_from_json(const Json& j);
FlatKnnModel knn_flat_from_json(const Json& j);

}  // namespace campaign
