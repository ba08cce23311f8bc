#include "campaign/wrapper.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <mutex>
#include <numeric>

#include "campaign/dtw.hpp"
#include "campaign/encoding.hpp"
#include "campaign/json_io.hpp"
#include "campaign/metrics.hpp"

namespace campaign {

FeatureSeries ObservationSet::instance_series(std::size_t instance, std::span<const std::size_t> features) const {
  FeatureSeries out;
  for (auto f : features) {
    const auto s = series(instance, f);
    out[feature_names.at(f)] = {s.begin(), s.end()};
  }
  return out;
}

ObservationSet observe(std::span<const TrendMatrix> corpus, int delay_minutes, int length,
                       const WindowingConfig& windowing, std::span<const int> shifts,
                       std::span<const std::size_t> rows) {
  if (length <= 0) throw InvalidArgument("observation length must be positive");
  if (!shifts.empty() && shifts.size() != corpus.size()) throw InvalidArgument("one shift per trend expected");
  const int base_end = observation_end_index(delay_minutes, windowing);

  std::vector<std::size_t> all_rows;
  if (rows.empty()) {
    all_rows.resize(kFeatureCount);
    std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
    rows = all_rows;
  }

  ObservationSet out;
  out.length = static_cast<std::size_t>(length);
  for (auto r : rows) out.feature_names.push_back(feature_names().at(r));
  out.values.resize(corpus.size() * rows.size() * out.length);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& m = corpus[i].matrix;
    const int cols = static_cast<int>(m.cols);
    int end = base_end;
    if (!shifts.empty()) end = std::clamp(base_end + shifts[i], length - 1, cols - 1);
    if (end - length + 1 < 0 || end >= cols) {
      throw RangeError("observation window for " + corpus[i].trend.hashtag + " falls outside its series");
    }
    out.hashtags.push_back(corpus[i].trend.hashtag);
    out.labels.push_back(corpus[i].trend.label);
    for (std::size_t f = 0; f < rows.size(); ++f) {
      if (rows[f] >= m.rows) throw RangeError("feature row out of range");
      const auto src = m.row(rows[f]).subspan(static_cast<std::size_t>(end - length + 1), out.length);
      std::copy(src.begin(), src.end(), out.values.begin() + static_cast<std::ptrdiff_t>((i * rows.size() + f) * out.length));
    }
  }
  return out;
}

CvPlan make_plan(std::span<const Label> all_labels, std::span<const std::size_t> members, int folds,
                 std::uint64_t seed) {
  CvPlan plan;
  plan.members.assign(members.begin(), members.end());
  plan.folds = folds;
  std::vector<Label> labels;
  labels.reserve(members.size());
  for (auto m : members) labels.push_back(all_labels[m]);
  plan.fold_of = stratified_folds(labels, folds, seed);
  return plan;
}

FoldAuc fold_auc(const CvPlan& plan, std::span<const Label> all_labels, std::span<const double> scores) {
  if (scores.size() != plan.members.size()) throw InvalidArgument("one score per plan member expected");
  FoldAuc out;
  std::vector<double> s;
  std::vector<Label> l;
  for (int g = 0; g < plan.folds; ++g) {
    s.clear();
    l.clear();
    for (std::size_t m = 0; m < plan.members.size(); ++m) {
      if (plan.fold_of[m] != g) continue;
      s.push_back(scores[m]);
      l.push_back(all_labels[plan.members[m]]);
    }
    out.per_fold.push_back(roc_auc(s, l));
  }
  const double n = static_cast<double>(out.per_fold.size());
  out.mean = std::accumulate(out.per_fold.begin(), out.per_fold.end(), 0.0) / n;
  if (out.per_fold.size() > 1) {
    double ss = 0;
    for (double a : out.per_fold) ss += (a - out.mean) * (a - out.mean);
    out.std_error = std::sqrt(ss / (n - 1)) / std::sqrt(n);
  }
  return out;
}

namespace {

// Plan members outside fold g, as instance indices.
std::vector<std::vector<std::size_t>> training_sets(const CvPlan& plan) {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(plan.folds));
  for (std::size_t m = 0; m < plan.members.size(); ++m) {
    for (int g = 0; g < plan.folds; ++g) {
      if (plan.fold_of[m] != g) out[static_cast<std::size_t>(g)].push_back(plan.members[m]);
    }
  }
  return out;
}

void check_subset(std::span<const std::size_t> subset, std::size_t feature_count) {
  if (subset.empty()) throw InvalidArgument("empty feature subset");
  for (auto f : subset) {
    if (f >= feature_count) throw RangeError("feature index out of range");
  }
}

// Per-member neighbor fractions from a full distance matrix over all instances.
void fill_fractions(const DistanceMatrix& d, const CvPlan& plan, std::span<const Label> labels, int k,
                    double* out) {
  const auto train = training_sets(plan);
  const auto n = static_cast<std::ptrdiff_t>(plan.members.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t m = 0; m < n; ++m) {
    const auto mi = static_cast<std::size_t>(m);
    out[mi] = nearest_promoted_fraction(d.row(plan.members[mi]), train[static_cast<std::size_t>(plan.fold_of[mi])],
                                        labels, k);
  }
}

class KnnDtwScorer final : public SubsetScorer {
 public:
  KnnDtwScorer(const ObservationSet& data, std::vector<CvPlan> plans, ScorerParams params)
      : SubsetScorer(data, std::move(plans), params) {
    offsets_.push_back(0);
    for (const auto& p : plans_) offsets_.push_back(offsets_.back() + p.members.size());
    cache_.resize(data_.feature_count());
    for (std::size_t f = 0; f < data_.feature_count(); ++f) {
      cache_[f] = knn_dtw_feature_fractions(data_, f, plans_, params_);
    }
  }

  std::vector<double> cv_scores(std::size_t plan, std::span<const std::size_t> subset) const override {
    check_subset(subset, data_.feature_count());
    const std::size_t n = plans_.at(plan).members.size();
    std::vector<double> out(n, 0.0);
    for (auto f : subset) {
      const double* frac = cache_[f].data() + offsets_[plan];
      for (std::size_t m = 0; m < n; ++m) out[m] += frac[m];
    }
    for (auto& v : out) v /= static_cast<double>(subset.size());
    return out;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<double>> cache_;  // [feature][plan-concatenated members]
};

class SaxVsmScorer final : public SubsetScorer {
 public:
  SaxVsmScorer(const ObservationSet& data, std::vector<CvPlan> plans, ScorerParams params)
      : SubsetScorer(data, std::move(plans), params) {
    words_.resize(data_.feature_count());
    const auto nf = static_cast<std::ptrdiff_t>(data_.feature_count());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t f = 0; f < nf; ++f) {
      auto& w = words_[static_cast<std::size_t>(f)];
      w.resize(data_.size());
      for (std::size_t i = 0; i < data_.size(); ++i) {
        w[i] = sax_word(data_.series(i, static_cast<std::size_t>(f)), params_.word_length, params_.alphabet_size).code();
      }
    }
    for (std::size_t i = 0; i < data_.size(); ++i) tie_.push_back(tie_break(derive_seed(params_.seed, data_.hashtags[i])));
  }

  std::vector<double> cv_scores(std::size_t plan_index, std::span<const std::size_t> subset) const override {
    check_subset(subset, data_.feature_count());
    const auto& plan = plans_.at(plan_index);
    std::vector<int> votes_p(plan.members.size(), 0), votes_o(plan.members.size(), 0);
    std::vector<std::uint32_t> bag_p, bag_o;
    for (int g = 0; g < plan.folds; ++g) {
      for (auto f : subset) {
        bag_p.clear();
        bag_o.clear();
        for (std::size_t m = 0; m < plan.members.size(); ++m) {
          if (plan.fold_of[m] == g) continue;
          const auto i = plan.members[m];
          (is_promoted(data_.labels[i]) ? bag_p : bag_o).push_back(words_[f][i]);
        }
        std::sort(bag_p.begin(), bag_p.end());
        std::sort(bag_o.begin(), bag_o.end());
        for (std::size_t m = 0; m < plan.members.size(); ++m) {
          if (plan.fold_of[m] != g) continue;
          const auto w = words_[f][plan.members[m]];
          votes_p[m] += std::binary_search(bag_p.begin(), bag_p.end(), w) ? 1 : 0;
          votes_o[m] += std::binary_search(bag_o.begin(), bag_o.end(), w) ? 1 : 0;
        }
      }
    }
    std::vector<double> out(plan.members.size());
    for (std::size_t m = 0; m < plan.members.size(); ++m) {
      Label l = votes_p[m] > votes_o[m] ? Label::promoted : Label::organic;
      if (votes_p[m] == votes_o[m]) l = tie_[plan.members[m]];
      out[m] = is_promoted(l) ? 1.0 : 0.0;
    }
    return out;
  }

 private:
  std::vector<std::vector<std::uint32_t>> words_;  // [feature][instance]
  std::vector<Label> tie_;
};

class FlatKnnScorer final : public SubsetScorer {
 public:
  FlatKnnScorer(const ObservationSet& data, std::vector<CvPlan> plans, ScorerParams params)
      : SubsetScorer(data, std::move(plans), params) {}

  std::vector<double> cv_scores(std::size_t plan_index, std::span<const std::size_t> subset) const override {
    check_subset(subset, data_.feature_count());
    const auto& plan = plans_.at(plan_index);
    const std::size_t n = plan.members.size();
    // greedy rounds share the prefix and vary only the last feature
    const std::vector<std::size_t> prefix(subset.begin(), subset.end() - 1);
    auto squared = prefix_distances(plan_index, prefix);
    add_feature(plan, subset.back(), squared);

    DistanceMatrix dist(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) dist.set(a, b, std::sqrt(squared[a * n + b]));
    }
    std::vector<Label> labels;
    for (auto i : plan.members) labels.push_back(data_.labels[i]);
    // training sets in member-local indices
    std::vector<std::vector<std::size_t>> train(static_cast<std::size_t>(plan.folds));
    for (std::size_t m = 0; m < n; ++m) {
      for (int g = 0; g < plan.folds; ++g) {
        if (plan.fold_of[m] != g) train[static_cast<std::size_t>(g)].push_back(m);
      }
    }
    std::vector<double> out(n);
    for (std::size_t m = 0; m < n; ++m) {
      out[m] = nearest_promoted_fraction(dist.row(m), train[static_cast<std::size_t>(plan.fold_of[m])], labels,
                                         params_.k);
    }
    return out;
  }

 private:
  using Key = std::pair<std::size_t, std::vector<std::size_t>>;
  static constexpr std::size_t kCacheEntries = 4;

  void add_feature(const CvPlan& plan, std::size_t f, std::vector<double>& squared) const {
    const std::size_t n = plan.members.size();
    for (std::size_t a = 0; a < n; ++a) {
      const auto x = data_.series(plan.members[a], f);
      for (std::size_t b = a + 1; b < n; ++b) {
        const auto y = data_.series(plan.members[b], f);
        double ss = 0;
        for (std::size_t t = 0; t < x.size(); ++t) ss += (x[t] - y[t]) * (x[t] - y[t]);
        squared[a * n + b] += ss;
      }
    }
  }

  std::vector<double> prefix_distances(std::size_t plan_index, const std::vector<std::size_t>& prefix) const {
    Key key{plan_index, prefix};
    {
      std::lock_guard lock(mutex_);
      for (const auto& [k, v] : cache_) {
        if (k == key) return v;
      }
    }
    const auto& plan = plans_[plan_index];
    std::vector<double> squared(plan.members.size() * plan.members.size(), 0.0);
    for (auto f : prefix) add_feature(plan, f, squared);
    std::lock_guard lock(mutex_);
    cache_.emplace_front(std::move(key), squared);
    if (cache_.size() > kCacheEntries) cache_.pop_back();
    return squared;
  }

  mutable std::mutex mutex_;
  mutable std::list<std::pair<Key, std::vector<double>>> cache_;
};

}  // namespace

std::vector<double> knn_dtw_feature_fractions(const ObservationSet& data, std::size_t feature,
                                              std::span<const CvPlan> plans, const ScorerParams& params) {
  std::vector<std::vector<double>> coarse(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) coarse[i] = paa(data.series(i, feature), params.coarsen_width).values;
  const DistanceMatrix d = pairwise_dtw_coarse(coarse);
  std::size_t total = 0;
  for (const auto& p : plans) total += p.members.size();
  std::vector<double> out(total);
  std::size_t offset = 0;
  for (const auto& p : plans) {
    fill_fractions(d, p, data.labels, params.k, out.data() + offset);
    offset += p.members.size();
  }
  return out;
}

std::unique_ptr<SubsetScorer> make_scorer(ClassifierKind kind, const ObservationSet& data,
                                          std::vector<CvPlan> plans, const ScorerParams& params) {
  for (const auto& p : plans) {
    if (p.members.size() != p.fold_of.size()) throw InvalidArgument("plan members and folds differ in length");
    for (auto m : p.members) {
      if (m >= data.size()) throw RangeError("plan member out of range");
    }
  }
  switch (kind) {
    case ClassifierKind::knn_dtw: return std::make_unique<KnnDtwScorer>(data, std::move(plans), params);
    case ClassifierKind::sax_vsm: return std::make_unique<SaxVsmScorer>(data, std::move(plans), params);
    case ClassifierKind::knn_flat: return std::make_unique<FlatKnnScorer>(data, std::move(plans), params);
  }
  throw InvalidArgument("unknown classifier");
}

}  // namespace campaign
