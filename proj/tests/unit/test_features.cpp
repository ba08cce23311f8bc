#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "campaign/features.hpp"
#include "campaign/ingest.hpp"
#include "campaign/reference.hpp"
#include "campaign/synth.hpp"
#include "helpers.hpp"

namespace campaign {
namespace {

TEST(Registry, ClassSplit) {
  EXPECT_EQ(feature_names().size(), 487u);
  EXPECT_EQ(feature_class_counts(), (std::array<std::size_t, 5>{101, 80, 25, 168, 113}));
  std::set<std::string> unique(feature_names().begin(), feature_names().end());
  EXPECT_EQ(unique.size(), 487u);
}

TEST(Registry, LookupAndPrefixes) {
  const auto i = feature_index("timing.tweet_count");
  EXPECT_EQ(feature_class(i), FeatureClass::timing);
  EXPECT_EQ(feature_names()[i], "timing.tweet_count");
  EXPECT_THROW(feature_index("timing.nope"), InvalidArgument);
  for (std::size_t k = 0; k < feature_names().size(); ++k) {
    EXPECT_TRUE(feature_names()[k].starts_with(std::string(to_string(feature_class(k))) + "."));
  }
  EXPECT_EQ(feature_class(feature_index("network.hashtag.nodes")), FeatureClass::network);
  EXPECT_EQ(feature_class(feature_index("sentiment.emoticon_tweet_ratio")), FeatureClass::sentiment);
}

TEST(Families, WidthsOnEmptyAndNonEmptyWindows) {
  const auto lex = test::small_lexicons();
  std::vector<TweetRecord> none;
  EXPECT_EQ(window_features(none, lex), std::vector<double>(487, 0.0));
  std::vector<TweetRecord> some{test::tweet(10, "a"), test::retweet(20, "b", "a")};
  EXPECT_EQ(network_family(some).size(), 101u);
  EXPECT_EQ(user_features(some).size(), 80u);
  EXPECT_EQ(timing_features(some).size(), 25u);
  EXPECT_EQ(content_features(some, lex).size(), 168u);
  EXPECT_EQ(sentiment_features(some, lex).size(), 113u);
}

TEST(Families, TimingGaps) {
  std::vector<TweetRecord> tweets{test::tweet(100, "a"), test::tweet(130, "b"), test::retweet(190, "c", "a")};
  const auto f = timing_features(tweets);
  const auto& names = feature_names();
  const auto base = feature_index("timing.tweet_count");
  EXPECT_EQ(f[0], 3);
  EXPECT_EQ(names[base + 1], "timing.gap.all.min");
  EXPECT_EQ(f[1], 30);  // min gap
  EXPECT_EQ(f[2], 60);  // max gap
  EXPECT_EQ(f[4], 45);  // mean gap
  // a single retweet has no gaps
  for (int k = 9; k < 17; ++k) EXPECT_EQ(f[k], 0);
}

TEST(Families, UserSummariesSplitSendersAndOriginators) {
  std::vector<TweetRecord> tweets{test::tweet(1, "a"), test::retweet(2, "b", "c")};
  tweets[0].sender.followers = 10;
  tweets[1].sender.followers = 30;
  const auto f = user_features(tweets);
  EXPECT_EQ(f[0], 10);  // sender followers min
  EXPECT_EQ(f[1], 30);
  EXPECT_EQ(f[3], 20);
  EXPECT_EQ(f[40], 5000);  // originator followers min
}

TEST(Profile, LexiconScores) {
  const auto lex = test::small_lexicons();
  auto t = test::tweet(1, "a");
  t.tokens = {"love", "great", "day", "awful", "zzz"};
  t.emoticon_tokens = {":)", ":)", ":("};
  const auto p = profile_tweet(t, lex);
  EXPECT_EQ(p.words, 5);
  EXPECT_NEAR(p.word_entropy, std::log(5.0), 1e-12);
  EXPECT_EQ(p.pos_count[static_cast<std::size_t>(PosTag::noun)], 1);
  EXPECT_NEAR(p.pos_proportion[static_cast<std::size_t>(PosTag::adjective)], 1.0 / 3, 1e-12);
  EXPECT_NEAR(p.sentiment[TweetProfile::happiness], 7.0, 1e-12);
  EXPECT_NEAR(p.sentiment[TweetProfile::valence], 7.5, 1e-12);
  EXPECT_NEAR(p.sentiment[TweetProfile::polarization], 0.5, 1e-12);
  EXPECT_NEAR(p.sentiment[TweetProfile::positive_ratio], 0.6, 1e-12);
  EXPECT_NEAR(p.sentiment[TweetProfile::polarization_entropy], std::log(3.0) - 2.0 / 3 * std::log(2.0), 1e-12);
  EXPECT_EQ(p.sentiment[TweetProfile::positive_emoticons], 2);
  EXPECT_EQ(p.sentiment[TweetProfile::negative_emoticons], 1);
  EXPECT_TRUE(p.has_emoticon);
}

TEST(Profile, NoCoverageIsMissing) {
  auto t = test::tweet(1, "a");
  t.tokens = {"zzz"};
  const auto p = profile_tweet(t, test::small_lexicons());
  EXPECT_TRUE(std::isnan(p.sentiment[TweetProfile::happiness]));
  EXPECT_TRUE(std::isnan(p.sentiment[TweetProfile::polarization]));
  EXPECT_FALSE(p.has_emoticon);
}

TEST(Extraction, ParallelMatchesSerialReference) {
  const auto lex = test::small_lexicons();
  auto params = SynthParams::defaults();
  params.volume_scale = 0.05;
  const auto vocab = Vocabulary::from_lexicons(lex, 50, 1);
  const auto trend = generate_trend(Label::promoted, params, vocab, 11, "demo", 1'500'000'000);
  ASSERT_GT(trend.tweets.size(), 20u);
  const auto windows = window_slices(trend.tweets, WindowingConfig{}, trend.trend.trending_time);
  const auto fast = extract_matrix(trend.tweets, windows, lex);
  const auto slow = reference::extract_matrix(trend.tweets, windows, lex);
  EXPECT_EQ(fast.rows, 487u);
  EXPECT_EQ(fast.cols, 120u);
  EXPECT_EQ(fast, slow);
  EXPECT_EQ(fast.at(feature_index("timing.tweet_count"), 59), static_cast<double>(windows[59].tweet_indices.size()));
}

TEST(Extraction, MatrixColumns) {
  FeatureMatrix m(3, 2);
  const std::vector<double> col{1, 2, 3};
  m.set_column(1, col);
  EXPECT_EQ(m.column(1), col);
  EXPECT_EQ(m.at(2, 1), 3);
  const std::vector<double> bad{1};
  EXPECT_THROW(m.set_column(0, bad), InvalidArgument);
}

}  // namespace
}  // namespace campaign
