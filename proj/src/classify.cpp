#include "campaign/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "campaign/dtw.hpp"
#include "campaign/encoding.hpp"

namespace campaign {
namespace {

const std::vector<double>& series_for(const FeatureSeries& trend, const std::string& feature) {
  auto it = trend.find(feature);
  if (it == trend.end()) throw InvalidArgument("missing feature: " + feature);
  return it->second;
}

void check_training(std::span<const TrainingTrend> trends, std::span<const std::string> features, int k) {
  if (trends.empty()) throw InvalidArgument("empty training set");
  if (features.empty()) throw InvalidArgument("no features selected");
  if (k < 1 || static_cast<std::size_t>(k) > trends.size()) {
    throw InvalidArgument("K must be in [1, training size]");
  }
}

std::vector<std::string> as_vector(std::span<const std::string> s) { return {s.begin(), s.end()}; }

Json labels_to_json(const std::vector<Label>& labels) {
  Json j = Json::array();
  for (auto l : labels) j.push_back(std::string(to_string(l)));
  return j;
}

std::vector<Label> labels_from_json(const Json& j) {
  std::vector<Label> out;
  for (const auto& l : j) out.push_back(parse_label(l.get<std::string>()));
  return out;
}

void expect_kind(const Json& j, ClassifierKind kind) {
  if (j.at("classifier").get<std::string>() != to_string(kind)) {
    throw DataError("model document is not a " + std::string(to_string(kind)) + " model");
  }
}

}  // namespace

std::string_view to_string(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::knn_dtw: return "knn_dtw";
    case ClassifierKind::sax_vsm: return "sax_vsm";
    case ClassifierKind::knn_flat: return "knn_flat";
  }
  return "unknown";
}

ClassifierKind parse_classifier(std::string_view text) {
  if (text == "knn_dtw" || text == "knn-dtw") return ClassifierKind::knn_dtw;
  if (text == "sax_vsm" || text == "sax-vsm") return ClassifierKind::sax_vsm;
  if (text == "knn_flat" || text == "knn-flat" || text == "knn") return ClassifierKind::knn_flat;
  throw InvalidArgument("unknown classifier: " + std::string(text));
}

double nearest_promoted_fraction(std::span<const double> distance_row, std::span<const std::size_t> candidates,
                                 std::span<const Label> labels, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > candidates.size()) {
    throw InvalidArgument("K must be in [1, number of candidates]");
  }
  // (distance, index) ordering makes ties resolve by training index
  std::vector<std::pair<double, std::size_t>> order;
  order.reserve(candidates.size());
  for (auto c : candidates) order.emplace_back(distance_row[c], c);
  auto kth = order.begin() + (k - 1);
  std::nth_element(order.begin(), kth, order.end());
  int promoted = 0;
  for (auto it = order.begin(); it <= kth; ++it) promoted += is_promoted(labels[it->second]) ? 1 : 0;
  return static_cast<double>(promoted) / k;
}

double nearest_promoted_fraction(std::span<const double> distances, std::span<const Label> labels, int k) {
  if (distances.size() != labels.size()) throw InvalidArgument("distance/label length mismatch");
  std::vector<std::size_t> all(distances.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return nearest_promoted_fraction(distances, all, labels, k);
}

// ---------------------------------------------------------------- KNN-DTW

TrainedKnnDtw train_knn_dtw(std::span<const TrainingTrend> trends, std::span<const std::string> features, int k,
                            std::size_t coarsen_width) {
  check_training(trends, features, k);
  TrainedKnnDtw model;
  model.features = as_vector(features);
  model.k = k;
  model.coarsen_width = coarsen_width;
  for (const auto& t : trends) {
    model.hashtags.push_back(t.hashtag);
    model.labels.push_back(t.label);
  }
  model.coarse.resize(features.size());
  for (std::size_t f = 0; f < features.size(); ++f) {
    std::size_t len = 0;
    for (const auto& t : trends) {
      const auto& s = series_for(t.series, features[f]);
      if (len == 0) len = s.size();
      if (s.size() != len) throw InvalidArgument("series lengths differ for " + features[f]);
      model.coarse[f].push_back(paa(s, coarsen_width).values);
    }
  }
  return model;
}

double knn_dtw_score(const FeatureSeries& query, const TrainedKnnDtw& model) {
  double total = 0;
  std::vector<double> distances(model.labels.size());
  std::vector<double> scratch;
  for (std::size_t f = 0; f < model.features.size(); ++f) {
    const auto q = paa(series_for(query, model.features[f]), model.coarsen_width).values;
    for (std::size_t i = 0; i < model.labels.size(); ++i) distances[i] = dtw_distance(q, model.coarse[f][i], scratch);
    total += nearest_promoted_fraction(distances, model.labels, model.k);
  }
  return total / static_cast<double>(model.features.size());
}

// ---------------------------------------------------------------- SAX-VSM

WordBags sax_vsm_train(std::span<const TrainingTrend> trends, std::span<const std::string> features,
                       std::size_t word_length, int alphabet_size) {
  check_training(trends, features, 1);
  const bool has_promoted = std::any_of(trends.begin(), trends.end(), [](auto& t) { return is_promoted(t.label); });
  const bool has_organic = std::any_of(trends.begin(), trends.end(), [](auto& t) { return !is_promoted(t.label); });
  if (!has_promoted || !has_organic) throw InvalidArgument("SAX-VSM training needs both classes");

  WordBags bags;
  bags.features = as_vector(features);
  bags.word_length = word_length;
  bags.alphabet_size = alphabet_size;
  bags.promoted.resize(features.size());
  bags.organic.resize(features.size());
  for (std::size_t f = 0; f < features.size(); ++f) {
    for (const auto& t : trends) {
      const auto code = sax_word(series_for(t.series, features[f]), word_length, alphabet_size).code();
      (is_promoted(t.label) ? bags.promoted[f] : bags.organic[f]).insert(code);
    }
  }
  return bags;
}

WordVotes sax_vsm_votes(const FeatureSeries& query, const WordBags& bags) {
  WordVotes votes;
  for (std::size_t f = 0; f < bags.features.size(); ++f) {
    const auto code = sax_word(series_for(query, bags.features[f]), bags.word_length, bags.alphabet_size).code();
    votes.promoted += bags.promoted[f].count(code) ? 1 : 0;
    votes.organic += bags.organic[f].count(code) ? 1 : 0;
  }
  return votes;
}

Label tie_break(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return (gen() >> 63) ? Label::promoted : Label::organic;
}

Label sax_vsm_classify(const FeatureSeries& query, const WordBags& bags, std::uint64_t rng_seed) {
  const WordVotes v = sax_vsm_votes(query, bags);
  if (v.promoted != v.organic) return v.promoted > v.organic ? Label::promoted : Label::organic;
  return tie_break(rng_seed);
}

// ---------------------------------------------------------------- flat KNN

std::vector<double> concatenate(const FeatureSeries& query, std::span<const std::string> features) {
  std::vector<double> out;
  for (const auto& f : features) {
    const auto& s = series_for(query, f);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

FlatKnnModel train_knn_flat(std::span<const TrainingTrend> trends, std::span<const std::string> features, int k) {
  check_training(trends, features, k);
  FlatKnnModel model;
  model.features = as_vector(features);
  model.k = k;
  for (const auto& t : trends) {
    model.hashtags.push_back(t.hashtag);
    model.labels.push_back(t.label);
    model.vectors.push_back(concatenate(t.series, features));
    if (model.vectors.back().size() != model.vectors.front().size()) {
      throw InvalidArgument("training vectors differ in dimension");
    }
  }
  return model;
}

double knn_flat_score(const FeatureSeries& query, const FlatKnnModel& model) {
  const auto q = concatenate(query, model.features);
  std::vector<double> distances(model.vectors.size());
  for (std::size_t i = 0; i < model.vectors.size(); ++i) {
    const auto& v = model.vectors[i];
    if (v.size() != q.size()) throw InvalidArgument("query dimension differs from training vectors");
    double ss = 0;
    for (std::size_t d = 0; d < q.size(); ++d) ss += (q[d] - v[d]) * (q[d] - v[d]);
    distances[i] = std::sqrt(ss);
  }
  return nearest_promoted_fraction(distances, model.labels, model.k);
}

double knn_flat_score(const FeatureSeries& query, std::span<const TrainingTrend> training,
                      std::span<const std::string> features, int k) {
  return knn_flat_score(query, train_knn_flat(training, features, k));
}

// ---------------------------------------------------------------- persistence

Json to_json(const TrainedKnnDtw& m) {
  return Json{{"classifier", "knn_dtw"}, {"features", m.features}, {"hashtags", m.hashtags},
              {"labels", labels_to_json(m.labels)}, {"k", m.k}, {"coarsen_width", m.coarsen_width},
              {"coarse_series", m.coarse}};
}

Json to_json(const WordBags& b) {
  auto sorted = [](const std::unordered_set<std::uint32_t>& s) {
    std::vector<std::uint32_t> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
  };
  Json promoted = Json::array(), organic = Json::array();
  for (std::size_t f = 0; f < b.features.size(); ++f) {
    promoted.push_back(sorted(b.promoted[f]));
    organic.push_back(sorted(b.organic[f]));
  }
  return Json{{"classifier", "sax_vsm"}, {"features", b.features}, {"word_length", b.word_length},
              {"alphabet_size", b.alphabet_size}, {"promoted_words", promoted}, {"organic_words", organic}};
}

Json to_json(const FlatKnnModel& m) {
  return Json{{"classifier", "knn_flat"}, {"features", m.features}, {"hashtags", m.hashtags},
              {"labels", labels_to_json(m.labels)}, {"k", m.k}, {"vectors", m.vectors}};
}

TrainedKnnDtw knn_dtw_from_json(const Json& j) {
  expect_kind(j, ClassifierKind::knn_dtw);
  TrainedKnnDtw m;
  m.features = j.at("features").get<std::vector<std::string>>();
  m.hashtags = j.at("hashtags").get<std::vector<std::string>>();
  m.labels = labels_from_json(j.at("labels"));
  m.k = j.at("k").get<int>();
  m.coarsen_width = j.at("coarsen_width").get<std::size_t>();
  m.coarse = j.at("coarse_series").get<std::vector<std::vector<std::vector<double>>>>();
  if (m.coarse.size() != m.features.size()) throw DataError("model feature count mismatch");
  return m;
}

WordBags word_bags_from_json(const Json& j) {
  expect_kind(j, ClassifierKind::sax_vsm);
  WordBags b;
  b.features = j.at("features").get<std::vector<std::string>>();
  b.word_length = j.at("word_length").get<std::size_t>();
  b.alphabet_size = j.at("alphabet_size").get<int>();
  for (const auto& words : j.at("promoted_words")) {
    auto v = words.get<std::vector<std::uint32_t>>();
    b.promoted.emplace_back(v.begin(), v.end());
  }
  for (const auto& words : j.at("organic_words")) {
    auto v = words.get<std::vector<std::uint32_t>>();
    b.organic.emplace_back(v.begin(), v.end());
  }
  if (b.promoted.size() != b.features.size() || b.organic.size() != b.features.size()) {
    throw DataError("model feature count mismatch");
  }
  return b;
}

FlatKnnModel knn_flat_from_json(const Json& j) {
  expect_kind(j, ClassifierKind::knn_flat);
  FlatKnnModel m;
  m.features = j.at("features").get<std::vector<std::string>>();
  m.hashtags = j.at("hashtags").get<std::vector<std::string>>();
  m.labels = labels_from_json(j.at("labels"));
  m.k = j.at("k").get<int>();
  m.vectors = j.at("vectors").get<std::vector<std::vector<double>>>();
  return m;
}

}  // namespace campaign
