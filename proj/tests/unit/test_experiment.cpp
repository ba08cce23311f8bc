#include <gtest/gtest.h>

#include "campaign/experiment.hpp"
#include "helpers.hpp"

namespace campaign {
namespace {

const std::vector<TrendMatrix>& corpus() {
  static const auto c = test::planted_corpus(15, 30, 4, {feature_index("timing.tweet_count")});
  return c;
}

ExperimentConfig quick_config() {
  ExperimentConfig c;
  c.folds = 3;
  c.seed = 12;
  c.candidates = {"timing.tweet_count", "user.sender.followers.mean", "content.words.max"};
  return c;
}

TEST(Config, JsonRoundTripAndUnknownKeys) {
  auto c = quick_config();
  c.nested = true;
  c.classifier = ClassifierKind::sax_vsm;
  c.scorer.k = 3;
  const auto back = experiment_config_from_json(Json::parse(to_json(c).dump()));
  EXPECT_EQ(to_json(back), to_json(c));
  EXPECT_THROW(experiment_config_from_json(Json{{"delays", 1}}), DataError);
  EXPECT_EQ(experiment_config_from_json(Json::object()).length, 35);
}

TEST(Config, Validation) {
  auto c = quick_config();
  c.folds = 1;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c = quick_config();
  c.length = 121;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c = quick_config();
  c.shift_sigmas = {-1};
  EXPECT_THROW(c.validate(), InvalidArgument);
}

TEST(Experiment, FindsPlantedFeature) {
  const auto r = run_experiment(corpus(), quick_config());
  ASSERT_EQ(r.selected_features.size(), 1u);
  EXPECT_EQ(r.selected_features[0].front(), "timing.tweet_count");
  EXPECT_GT(r.mean_auc, 0.9);
  EXPECT_EQ(r.per_fold_auc.size(), 3u);
  EXPECT_EQ(r.per_instance_scores.size(), 45u);
  EXPECT_EQ(r.classifier, "knn_dtw");
}

TEST(Experiment, NestedSelectsPerFold) {
  auto c = quick_config();
  c.nested = true;
  const auto r = run_experiment(corpus(), c);
  EXPECT_EQ(r.selected_features.size(), 3u);
  EXPECT_EQ(r.selection_trace.size(), 3u);
  EXPECT_TRUE(r.nested);
  EXPECT_GT(r.mean_auc, 0.9);
}

TEST(Experiment, Deterministic) {
  const auto a = run_experiment(corpus(), quick_config());
  const auto b = run_experiment(corpus(), quick_config());
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Experiment, ZeroSigmaMatchesUnshifted) {
  const auto base = run_experiment(corpus(), quick_config());
  const std::vector<double> sigmas{0, 4};
  const auto shifted = shift_experiment(corpus(), sigmas, quick_config());
  ASSERT_EQ(shifted.size(), 2u);
  EXPECT_EQ(to_json(shifted.at(0.0)).dump(), to_json(base).dump());
}

TEST(Experiment, ShiftsAreSeededPerHashtag) {
  const auto a = draw_shifts(corpus(), 8, 3);
  EXPECT_EQ(a, draw_shifts(corpus(), 8, 3));
  EXPECT_EQ(draw_shifts(corpus(), 0, 3), std::vector<int>(corpus().size(), 0));
  double sum = 0, sq = 0;
  const auto big = draw_shifts(test::planted_corpus(400, 400, 1, {}), 8, 3);
  for (int s : big) {
    sum += s;
    sq += static_cast<double>(s) * s;
  }
  const double n = static_cast<double>(big.size());
  EXPECT_NEAR(sum / n, 0, 1.0);
  EXPECT_NEAR(std::sqrt(sq / n), 8, 0.8);
}

TEST(Experiment, DelaySweepShape) {
  const std::vector<int> delays{-40, 0, 40};
  const auto sweep = delay_sweep(corpus(), delays, quick_config());
  ASSERT_EQ(sweep.size(), 3u);
  for (int d : delays) {
    EXPECT_EQ(sweep.at(d).delay_minutes, d);
    EXPECT_GE(sweep.at(d).mean_auc, 0);
    EXPECT_LE(sweep.at(d).mean_auc, 1);
  }
}

TEST(Experiment, CrossValidateFixedSubset) {
  const std::vector<std::size_t> rows{feature_index("timing.tweet_count"), 0};
  const auto data = observe(corpus(), 0, 35, WindowingConfig{}, {}, rows);
  const std::vector<std::size_t> features{0};
  for (auto kind : {ClassifierKind::knn_dtw, ClassifierKind::sax_vsm, ClassifierKind::knn_flat}) {
    auto c = quick_config();
    c.classifier = kind;
    const auto r = cross_validate(data, features, c);
    EXPECT_EQ(r.selected_features, (std::vector<std::vector<std::string>>{{"timing.tweet_count"}}));
    // SAX words discard the level, so only the ramp shape separates the classes
    EXPECT_GT(r.mean_auc, kind == ClassifierKind::sax_vsm ? 0.6 : 0.8) << to_string(kind);
  }
  EXPECT_THROW(cross_validate(data, {}, quick_config()), InvalidArgument);
}

TEST(Report, JsonAndCsv) {
  const auto r = run_experiment(corpus(), quick_config());
  const auto back = evaluation_report_from_json(Json::parse(to_json(r).dump()));
  EXPECT_EQ(to_json(back).dump(), to_json(r).dump());
  const auto csv = roc_csv(r);
  EXPECT_TRUE(csv.starts_with("fpr,tpr\n0,0\n"));
  EXPECT_TRUE(csv.ends_with("1,1\n"));
  const auto j = to_json(r);
  for (const char* key : {"mean_auc", "per_fold_auc", "roc_points", "best_threshold", "best_f1",
                          "per_instance_scores", "misclassified", "selected_features"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(CorpusFiles, MatricesRoundTrip) {
  const auto dir = test::temp_dir("matrices");
  for (std::size_t i = 0; i < 3; ++i) {
    write_file(dir / (corpus()[i].trend.hashtag + ".json"), to_json(corpus()[i]).dump());
  }
  write_file(dir / "provenance.json", "{}");
  const auto loaded = load_matrices(dir);
  ASSERT_EQ(loaded.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(loaded[i].trend, corpus()[i].trend);
    EXPECT_EQ(loaded[i].matrix, corpus()[i].matrix);
  }
  write_file(dir / "dup.json", to_json(corpus()[0]).dump());
  EXPECT_THROW(load_matrices(dir), DuplicateError);
  std::filesystem::remove_all(dir);
}

TEST(CorpusFiles, TweetFileEscapes) {
  EXPECT_EQ(tweet_file("c", "abc_1").filename(), "abc_1.jsonl");
  EXPECT_EQ(tweet_file("c", "a/b").filename(), "a%2fb.jsonl");
}

}  // namespace
}  // namespace campaign
