#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "campaign/json_io.hpp"
#include "campaign/lexicon.hpp"
#include "campaign/types.hpp"

namespace campaign {

/// Across-trend mean and standard deviation of a per-trend quantity.
struct Moments {
  double mean = 0;
  double sd = 0;
  bool operator==(const Moments&) const = default;
};

struct ClassParams {
  Moments tweets;              // total tweets per trend (lognormal)
  Moments retweet_ratio;       // per-trend fractions (beta)
  Moments reply_ratio;
  Moments urls_per_tweet;      // per-trend means (gamma), per-tweet Poisson
  Moments hashtags_per_tweet;  // includes the trend's own tag
  Moments mentions_per_tweet;
  Moments words_per_tweet;
  double pre_trend_fraction = 0.13;
  double rise_hours = 8;    // e-folding time of the pre-trend ramp
  double decay_hours = 10;  // e-folding time of the post-trend decay
  /// Accounts that receive `seed_share` of all retweets and mentions.
  int seed_accounts = 3;
  double seed_share = 0.05;
  double seed_follower_boost = 1;  // follower multiplier of seed accounts
  double sender_concentration = 1;  // >1 skews senders towards a few heavy users

  bool operator==(const ClassParams&) const = default;
};

struct SynthParams {
  ClassParams promoted;
  ClassParams organic;
  double volume_scale = 1;     // multiplies tweet-count mean and sd
  std::int64_t max_tweets = 50000;
  std::size_t vocabulary_size = 2000;
  double zipf_exponent = 1.1;
  double emoticon_rate = 0.08;  // probability a tweet carries an emoticon
  double users_per_tweet = 0.6; // user-pool size relative to tweet count
  double follower_log_mean = 5.5;
  double follower_log_sd = 1.8;
  Timestamp epoch = 1420070400;  // first trending time
  Timestamp trend_spacing = 86400;

  /// Reference per-class trend statistics with default burst and seed-account settings.
  static SynthParams defaults();
  /// Both classes set to the organic parameters.
  SynthParams without_class_differences() const;
  void validate() const;
  const ClassParams& for_label(Label label) const { return is_promoted(label) ? promoted : organic; }
};

Json to_json(const SynthParams& params);
/// Missing keys keep their defaults.
SynthParams synth_params_from_json(const Json& j);

struct SyntheticTrend {
  TrendRecord trend;
  std::vector<TweetRecord> tweets;  // ascending by timestamp
};

/// Words (and emoticons) the generator draws text from.
struct Vocabulary {
  std::vector<std::string> words;      // Zipf rank order
  std::vector<std::string> emoticons;

  /// Every lexicon word, ordered by a seeded shuffle; falls back to
  /// placeholder tokens when the lexicons are empty.
  static Vocabulary from_lexicons(const Lexicons& lexicons, std::size_t size, std::uint64_t seed);
};

SyntheticTrend generate_trend(Label label, const SynthParams& params, const Vocabulary& vocabulary,
                              std::uint64_t seed, std::string hashtag, Timestamp trending_time);

/// Trend i (promoted first) uses seed derive_seed(seed, i); trends are
/// generated in parallel.
std::vector<SyntheticTrend> generate_corpus(int n_promoted, int n_organic, const SynthParams& params,
                                            const Vocabulary& vocabulary, std::uint64_t seed);

/// Writes manifest.jsonl and tweets/<hashtag>.jsonl under `dir`.
void write_corpus(const std::filesystem::path& dir, const std::vector<SyntheticTrend>& corpus);

}  // namespace campaign
