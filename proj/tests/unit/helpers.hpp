#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "campaign/features.hpp"
#include "campaign/lexicon.hpp"
#include "campaign/wrapper.hpp"
#include "campaign/types.hpp"

namespace campaign::test {

inline UserMeta user(const std::string& id, std::int64_t followers = 100) {
  return {id, followers, 50, 10, 1000, 2};
}

inline TweetRecord tweet(Timestamp ts, const std::string& sender, std::vector<std::string> hashtags = {"x"}) {
  TweetRecord t;
  t.id = sender + "-" + std::to_string(ts);
  t.timestamp = ts;
  t.sender = user(sender);
  t.hashtags = std::move(hashtags);
  return t;
}

inline TweetRecord retweet(Timestamp ts, const std::string& sender, const std::string& originator) {
  auto t = tweet(ts, sender);
  t.is_retweet = true;
  t.originator = user(originator, 5000);
  return t;
}

/// A handful of tagged and scored words.
inline Lexicons small_lexicons() {
  Lexicons lex;
  lex.add_pos("love", PosTag::verb);
  lex.add_pos("day", PosTag::noun);
  lex.add_pos("great", PosTag::adjective);
  lex.add_pos("can", PosTag::modal);
  lex.add_pos("all", PosTag::predeterminer);
  lex.add_pos("wow", PosTag::interjection);
  lex.add_pos("very", PosTag::adverb);
  lex.add_pos("we", PosTag::pronoun);
  lex.add_happiness("love", 8.0);
  lex.add_happiness("great", 7.5);
  lex.add_happiness("day", 5.5);
  lex.add_vad("love", {8.0, 6.0, 5.5});
  lex.add_vad("great", {7.0, 5.0, 6.0});
  lex.add_polarity("love", {Polarity::positive, 1.0});
  lex.add_polarity("great", {Polarity::positive, 0.5});
  lex.add_polarity("awful", {Polarity::negative, 1.0});
  lex.add_emoticon(":)", Polarity::positive);
  lex.add_emoticon(":(", Polarity::negative);
  return lex;
}

inline std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("campaign_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

inline std::vector<double> random_series(std::mt19937_64& g, std::size_t n, double lo = -3, double hi = 3) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> out(n);
  for (auto& v : out) v = u(g);
  return out;
}

/// Trends whose matrices hold uniform noise, except that `planted` rows of
/// promoted trends carry an upward ramp of height `signal`.
inline std::vector<TrendMatrix> planted_corpus(int n_promoted, int n_organic, std::uint64_t seed,
                                               const std::vector<std::size_t>& planted, double signal = 3) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<TrendMatrix> out;
  for (int i = 0; i < n_promoted + n_organic; ++i) {
    TrendMatrix t;
    t.trend = {"t" + std::to_string(i), 1'500'000'000 + 86400 * i, i < n_promoted ? Label::promoted : Label::organic};
    t.matrix = FeatureMatrix(kFeatureCount, 120);
    for (auto& v : t.matrix.values) v = u(g);
    if (i < n_promoted) {
      for (auto r : planted) {
        for (std::size_t c = 0; c < 120; ++c) t.matrix.at(r, c) += signal * static_cast<double>(c) / 120;
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace campaign::test
