#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "campaign/experiment.hpp"
#include "campaign/ingest.hpp"
#include "campaign/synth.hpp"
#include "helpers.hpp"

namespace campaign {
namespace {

SynthParams small_params() {
  auto p = SynthParams::defaults();
  p.volume_scale = 0.02;
  return p;
}

const Vocabulary& vocab() {
  static const Vocabulary v = Vocabulary::from_lexicons(test::small_lexicons(), 200, 3);
  return v;
}

TEST(Synth, PreTrendFractionPromoted) {
  const auto corpus = generate_corpus(200, 1, small_params(), vocab(), 5);
  double before = 0, total = 0;
  for (const auto& t : corpus) {
    if (t.trend.label != Label::promoted) continue;
    for (const auto& tw : t.tweets) before += tw.timestamp < t.trend.trending_time;
    total += static_cast<double>(t.tweets.size());
  }
  EXPECT_NEAR(before / total, 0.15, 0.03);
}

TEST(Synth, OrganicRetweetRatioMean) {
  const auto corpus = generate_corpus(1, 300, small_params(), vocab(), 6);
  double sum = 0;
  int n = 0;
  for (const auto& t : corpus) {
    if (t.trend.label != Label::organic) continue;
    double rts = 0;
    for (const auto& tw : t.tweets) rts += tw.is_retweet;
    sum += rts / static_cast<double>(t.tweets.size());
    ++n;
  }
  EXPECT_NEAR(sum / n, 0.33, 0.05);
}

TEST(Synth, TweetsAreWellFormed) {
  const auto t = generate_trend(Label::promoted, small_params(), vocab(), 1, "#Demo", 1'500'000'000);
  EXPECT_EQ(t.trend.hashtag, "demo");
  ASSERT_FALSE(t.tweets.empty());
  std::set<std::string> ids;
  for (std::size_t i = 0; i < t.tweets.size(); ++i) {
    const auto& tw = t.tweets[i];
    if (i > 0) EXPECT_LE(t.tweets[i - 1].timestamp, tw.timestamp);
    EXPECT_LE(std::llabs(tw.timestamp - t.trend.trending_time), kDefaultHalfSpan);
    EXPECT_EQ(tw.hashtags.front(), "demo");
    EXPECT_EQ(tw.is_retweet, tw.originator.has_value());
    EXPECT_FALSE(tw.tokens.empty());
    EXPECT_TRUE(ids.insert(tw.id).second);
  }
}

TEST(Synth, Deterministic) {
  const auto a = generate_corpus(3, 4, small_params(), vocab(), 99);
  const auto b = generate_corpus(3, 4, small_params(), vocab(), 99);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].trend, b[i].trend);
    EXPECT_EQ(a[i].tweets, b[i].tweets);
  }
  const auto c = generate_corpus(3, 4, small_params(), vocab(), 100);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs |= a[i].tweets != c[i].tweets;
  EXPECT_TRUE(differs);
}

TEST(Synth, ClassCountsAndNames) {
  const auto corpus = generate_corpus(6, 60, small_params(), vocab(), 2);
  ASSERT_EQ(corpus.size(), 66u);
  int promoted = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    promoted += corpus[i].trend.label == Label::promoted;
    char name[32];
    std::snprintf(name, sizeof name, "trend%05zu", i);
    EXPECT_EQ(corpus[i].trend.hashtag, name);
  }
  EXPECT_EQ(promoted, 6);
}

TEST(Synth, WrittenCorpusIsIngestible) {
  const auto dir = test::temp_dir("synth_write");
  const auto corpus = generate_corpus(6, 60, small_params(), vocab(), 2);
  write_corpus(dir, corpus);
  const auto manifest = load_manifest(dir / "manifest.jsonl");
  ASSERT_EQ(manifest.size(), 66u);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir / "tweets")) files += e.is_regular_file();
  EXPECT_EQ(files, 66u);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto tweets = load_tweets(tweet_file(dir, manifest[i].hashtag), manifest[i].hashtag, manifest[i].trending_time);
    EXPECT_EQ(tweets, corpus[i].tweets);
  }
  std::filesystem::remove_all(dir);
}

TEST(Synth, ParamsJson) {
  auto p = small_params();
  p.organic.seed_share = 0.11;
  const auto back = synth_params_from_json(Json::parse(to_json(p).dump()));
  EXPECT_EQ(back.organic, p.organic);
  EXPECT_EQ(back.promoted, p.promoted);
  EXPECT_EQ(back.volume_scale, p.volume_scale);
  const auto same = synth_params_from_json(Json{{"identical_classes", true}});
  EXPECT_EQ(same.promoted, same.organic);
  EXPECT_THROW(synth_params_from_json(Json::array()), DataError);
}

TEST(Synth, Validation) {
  auto p = SynthParams::defaults();
  p.promoted.seed_share = 1.5;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = SynthParams::defaults();
  p.volume_scale = 0;
  EXPECT_THROW(p.validate(), InvalidArgument);
  EXPECT_THROW(generate_corpus(0, 3, SynthParams::defaults(), vocab(), 1), InvalidArgument);
}

TEST(Synth, VocabularyPadsAndShuffles) {
  const auto lex = test::small_lexicons();
  const auto v = Vocabulary::from_lexicons(lex, 50, 1);
  EXPECT_EQ(v.words.size(), 50u);
  EXPECT_EQ(v.emoticons, (std::vector<std::string>{":(", ":)"}));
  const auto words = lex.words();
  const std::set<std::string> lexical(words.begin(), words.end());
  for (std::size_t i = 0; i < lexical.size(); ++i) EXPECT_TRUE(lexical.count(v.words[i]));
  EXPECT_EQ(v.words, Vocabulary::from_lexicons(lex, 50, 1).words);
}

}  // namespace
}  // namespace campaign
