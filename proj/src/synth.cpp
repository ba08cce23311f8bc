#include "campaign/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include "campaign/experiment.hpp"
#include "campaign/metrics.hpp"

namespace campaign {
namespace {

using Rng = std::mt19937_64;

double uniform(Rng& g) { return (static_cast<double>(g() >> 11) + 0.5) * 0x1.0p-53; }

double lognormal_with(Rng& g, double mean, double sd) {
  if (sd <= 0) return mean;
  const double s2 = std::log1p((sd * sd) / (mean * mean));
  return std::lognormal_distribution<double>(std::log(mean) - s2 / 2, std::sqrt(s2))(g);
}

double gamma_with(Rng& g, double mean, double sd) {
  if (sd <= 0 || mean <= 0) return mean;
  const double shape = (mean * mean) / (sd * sd);
  return std::gamma_distribution<double>(shape, (sd * sd) / mean)(g);
}

double beta_with(Rng& g, double mean, double sd) {
  if (sd <= 0 || mean <= 0 || mean >= 1) return mean;
  // the variance must stay below mean(1-mean); cap it just inside
  const double var = std::min(sd * sd, 0.95 * mean * (1 - mean));
  const double common = mean * (1 - mean) / var - 1;
  const double a = std::gamma_distribution<double>(mean * common, 1.0)(g);
  const double b = std::gamma_distribution<double>((1 - mean) * common, 1.0)(g);
  return a + b > 0 ? a / (a + b) : mean;
}

int poisson(Rng& g, double mean) {
  if (mean <= 0) return 0;
  return std::poisson_distribution<int>(mean)(g);
}

bool bernoulli(Rng& g, double p) { return uniform(g) < p; }

// Offset in seconds drawn from an exponential of scale tau truncated to [0, limit).
Timestamp truncated_exponential(Rng& g, double tau, double limit) {
  const double mass = -std::expm1(-limit / tau);
  const double x = -tau * std::log1p(-uniform(g) * mass);
  return static_cast<Timestamp>(std::min(std::floor(x), limit - 1));
}

class ZipfSampler {
 public:
  ZipfSampler(std::size_t n, double exponent) {
    cdf_.reserve(n);
    double total = 0;
    for (std::size_t r = 1; r <= n; ++r) {
      total += 1.0 / std::pow(static_cast<double>(r), exponent);
      cdf_.push_back(total);
    }
    for (auto& c : cdf_) c /= total;
  }
  std::size_t operator()(Rng& g) const {
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), uniform(g));
    return std::min(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
  }

 private:
  std::vector<double> cdf_;
};

UserMeta make_user(Rng& g, std::string id, const SynthParams& p, double boost) {
  UserMeta u;
  u.user_id = std::move(id);
  const double followers = std::lognormal_distribution<double>(p.follower_log_mean, p.follower_log_sd)(g) * boost;
  u.followers = static_cast<std::int64_t>(followers);
  u.followees = static_cast<std::int64_t>(std::lognormal_distribution<double>(5.0, 1.0)(g));
  u.favorites = static_cast<std::int64_t>(std::lognormal_distribution<double>(6.0, 2.0)(g));
  u.statuses = static_cast<std::int64_t>(std::lognormal_distribution<double>(8.0, 1.5)(g));
  u.listed = static_cast<std::int64_t>(followers * 0.01 * std::lognormal_distribution<double>(0.0, 0.5)(g));
  return u;
}

constexpr std::size_t kCoTagCount = 200;
constexpr double kSpanSeconds = 2.0 * 86400;

Json moments_json(const Moments& m) { return Json::array({m.mean, m.sd}); }

Moments moments_from(const Json& j, const Moments& fallback) {
  if (j.is_null()) return fallback;
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json class_json(const ClassParams& c) {
  return Json{{"tweets", moments_json(c.tweets)},
              {"retweet_ratio", moments_json(c.retweet_ratio)},
              {"reply_ratio", moments_json(c.reply_ratio)},
              {"urls_per_tweet", moments_json(c.urls_per_tweet)},
              {"hashtags_per_tweet", moments_json(c.hashtags_per_tweet)},
              {"mentions_per_tweet", moments_json(c.mentions_per_tweet)},
              {"words_per_tweet", moments_json(c.words_per_tweet)},
              {"pre_trend_fraction", c.pre_trend_fraction},
              {"rise_hours", c.rise_hours},
              {"decay_hours", c.decay_hours},
              {"seed_accounts", c.seed_accounts},
              {"seed_share", c.seed_share},
              {"seed_follower_boost", c.seed_follower_boost},
              {"sender_concentration", c.sender_concentration}};
}

ClassParams class_from(const Json& j, const ClassParams& d) {
  ClassParams c = d;
  auto m = [&](const char* key, const Moments& fb) { return moments_from(j.contains(key) ? j.at(key) : Json(), fb); };
  c.tweets = m("tweets", d.tweets);
  c.retweet_ratio = m("retweet_ratio", d.retweet_ratio);
  c.reply_ratio = m("reply_ratio", d.reply_ratio);
  c.urls_per_tweet = m("urls_per_tweet", d.urls_per_tweet);
  c.hashtags_per_tweet = m("hashtags_per_tweet", d.hashtags_per_tweet);
  c.mentions_per_tweet = m("mentions_per_tweet", d.mentions_per_tweet);
  c.words_per_tweet = m("words_per_tweet", d.words_per_tweet);
  c.pre_trend_fraction = j.value("pre_trend_fraction", d.pre_trend_fraction);
  c.rise_hours = j.value("rise_hours", d.rise_hours);
  c.decay_hours = j.value("decay_hours", d.decay_hours);
  c.seed_accounts = j.value("seed_accounts", d.seed_accounts);
  c.seed_share = j.value("seed_share", d.seed_share);
  c.seed_follower_boost = j.value("seed_follower_boost", d.seed_follower_boost);
  c.sender_concentration = j.value("sender_concentration", d.sender_concentration);
  return c;
}

void validate_class(const ClassParams& c, const char* name) {
  auto fail = [&](const std::string& what) { throw InvalidArgument(std::string(name) + ": " + what); };
  auto ratio = [&](const Moments& m, const char* what) {
    if (!(m.mean >= 0 && m.mean <= 1) || m.sd < 0) fail(std::string(what) + " must be a ratio");
  };
  auto positive = [&](const Moments& m, const char* what) {
    if (!(m.mean > 0) || m.sd < 0) fail(std::string(what) + " mean must be positive");
  };
  positive(c.tweets, "tweets");
  ratio(c.retweet_ratio, "retweet_ratio");
  ratio(c.reply_ratio, "reply_ratio");
  positive(c.urls_per_tweet, "urls_per_tweet");
  positive(c.mentions_per_tweet, "mentions_per_tweet");
  positive(c.words_per_tweet, "words_per_tweet");
  if (!(c.hashtags_per_tweet.mean >= 1)) fail("hashtags_per_tweet mean must be at least 1");
  if (!(c.pre_trend_fraction >= 0 && c.pre_trend_fraction <= 1)) fail("pre_trend_fraction must be a ratio");
  if (!(c.rise_hours > 0 && c.decay_hours > 0)) fail("burst time constants must be positive");
  if (c.seed_accounts < 1) fail("seed_accounts must be at least 1");
  if (!(c.seed_share >= 0 && c.seed_share <= 1)) fail("seed_share must be a ratio");
  if (!(c.seed_follower_boost > 0)) fail("seed_follower_boost must be positive");
  if (!(c.sender_concentration >= 1)) fail("sender_concentration must be at least 1");
}

}  // namespace

SynthParams SynthParams::defaults() {
  SynthParams p;
  p.promoted.tweets = {2385, 6138};
  p.promoted.retweet_ratio = {0.42, 0.138};
  p.promoted.reply_ratio = {0.075, 0.078};
  p.promoted.urls_per_tweet = {0.25, 0.176};
  p.promoted.hashtags_per_tweet = {1.7, 0.33};
  p.promoted.mentions_per_tweet = {0.8, 0.28};
  p.promoted.words_per_tweet = {13.5, 2.21};
  p.promoted.pre_trend_fraction = 0.15;
  p.promoted.rise_hours = 2;
  p.promoted.decay_hours = 6;
  p.promoted.seed_accounts = 2;
  p.promoted.seed_share = 0.3;
  p.promoted.seed_follower_boost = 50;
  p.promoted.sender_concentration = 2;

  p.organic.tweets = {3692, 9720};
  p.organic.retweet_ratio = {0.33, 0.186};
  p.organic.reply_ratio = {0.20, 0.218};
  p.organic.urls_per_tweet = {0.15, 0.149};
  p.organic.hashtags_per_tweet = {1.7, 0.78};
  p.organic.mentions_per_tweet = {0.9, 0.35};
  p.organic.words_per_tweet = {12.2, 2.74};
  p.organic.pre_trend_fraction = 0.13;
  p.organic.rise_hours = 8;
  p.organic.decay_hours = 12;
  p.organic.seed_accounts = 5;
  p.organic.seed_share = 0.05;
  p.organic.seed_follower_boost = 5;
  p.organic.sender_concentration = 1;
  return p;
}

SynthParams SynthParams::without_class_differences() const {
  SynthParams p = *this;
  p.promoted = p.organic;
  return p;
}

void SynthParams::validate() const {
  validate_class(promoted, "promoted");
  validate_class(organic, "organic");
  if (!(volume_scale > 0)) throw InvalidArgument("volume_scale must be positive");
  if (max_tweets < 1) throw InvalidArgument("max_tweets must be positive");
  if (vocabulary_size < 1) throw InvalidArgument("vocabulary_size must be positive");
  if (!(zipf_exponent > 0)) throw InvalidArgument("zipf_exponent must be positive");
  if (!(emoticon_rate >= 0 && emoticon_rate <= 1)) throw InvalidArgument("emoticon_rate must be a ratio");
  if (!(users_per_tweet > 0)) throw InvalidArgument("users_per_tweet must be positive");
  if (!(follower_log_sd >= 0)) throw InvalidArgument("follower_log_sd must be non-negative");
  if (epoch <= static_cast<Timestamp>(kSpanSeconds)) throw InvalidArgument("epoch too small");
}

Json to_json(const SynthParams& p) {
  return Json{{"promoted", class_json(p.promoted)},
              {"organic", class_json(p.organic)},
              {"volume_scale", p.volume_scale},
              {"max_tweets", p.max_tweets},
              {"vocabulary_size", p.vocabulary_size},
              {"zipf_exponent", p.zipf_exponent},
              {"emoticon_rate", p.emoticon_rate},
              {"users_per_tweet", p.users_per_tweet},
              {"follower_log_mean", p.follower_log_mean},
              {"follower_log_sd", p.follower_log_sd},
              {"epoch", p.epoch},
              {"trend_spacing", p.trend_spacing}};
}

SynthParams synth_params_from_json(const Json& j) {
  if (!j.is_object()) throw DataError("synth params must be a JSON object");
  SynthParams p = SynthParams::defaults();
  try {
    if (j.contains("promoted")) p.promoted = class_from(j.at("promoted"), p.promoted);
    if (j.contains("organic")) p.organic = class_from(j.at("organic"), p.organic);
    p.volume_scale = j.value("volume_scale", p.volume_scale);
    p.max_tweets = j.value("max_tweets", p.max_tweets);
    p.vocabulary_size = j.value("vocabulary_size", p.vocabulary_size);
    p.zipf_exponent = j.value("zipf_exponent", p.zipf_exponent);
    p.emoticon_rate = j.value("emoticon_rate", p.emoticon_rate);
    p.users_per_tweet = j.value("users_per_tweet", p.users_per_tweet);
    p.follower_log_mean = j.value("follower_log_mean", p.follower_log_mean);
    p.follower_log_sd = j.value("follower_log_sd", p.follower_log_sd);
    p.epoch = j.value("epoch", p.epoch);
    p.trend_spacing = j.value("trend_spacing", p.trend_spacing);
    if (j.value("identical_classes", false)) p = p.without_class_differences();
  } catch (const Json::exception& e) {
    throw DataError(std::string("bad synth params: ") + e.what());
  }
  p.validate();
  return p;
}

Vocabulary Vocabulary::from_lexicons(const Lexicons& lexicons, std::size_t size, std::uint64_t seed) {
  Vocabulary v;
  v.words = lexicons.words();
  std::vector<std::size_t> order(v.words.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  seeded_shuffle(order, seed);
  std::vector<std::string> shuffled;
  for (auto i : order) shuffled.push_back(v.words[i]);
  v.words = std::move(shuffled);
  // pad with neutral placeholder words so the Zipf tail is long enough
  for (std::size_t i = v.words.size(); i < size; ++i) v.words.push_back("w" + std::to_string(i));
  v.emoticons = lexicons.emoticon_tokens();
  if (v.emoticons.empty()) v.emoticons = {":)", ":("};
  return v;
}

SyntheticTrend generate_trend(Label label, const SynthParams& params, const Vocabulary& vocabulary,
                              std::uint64_t seed, std::string hashtag, Timestamp trending_time) {
  params.validate();
  if (vocabulary.words.empty()) throw InvalidArgument("empty vocabulary");
  const ClassParams& c = params.for_label(label);
  Rng g(seed);

  SyntheticTrend out;
  out.trend = {normalize_hashtag(hashtag), trending_time, label};

  // per-trend levels
  const double raw_count = lognormal_with(g, c.tweets.mean * params.volume_scale, c.tweets.sd * params.volume_scale);
  const auto n = std::clamp<std::int64_t>(std::llround(raw_count), 1, params.max_tweets);
  const double rt = beta_with(g, c.retweet_ratio.mean, c.retweet_ratio.sd);
  const double reply = beta_with(g, c.reply_ratio.mean, c.reply_ratio.sd);
  const double urls = gamma_with(g, c.urls_per_tweet.mean, c.urls_per_tweet.sd);
  const double tags = std::max(1.0, gamma_with(g, c.hashtags_per_tweet.mean, c.hashtags_per_tweet.sd));
  const double mentions = gamma_with(g, c.mentions_per_tweet.mean, c.mentions_per_tweet.sd);
  const double words = std::max(1.0, gamma_with(g, c.words_per_tweet.mean, c.words_per_tweet.sd));
  // replies are drawn among non-retweets so the overall ratio matches
  const double reply_given_original = rt < 1 ? std::min(1.0, reply / (1 - rt)) : 0.0;

  const auto pool_size = static_cast<std::size_t>(std::max(20.0, params.users_per_tweet * static_cast<double>(n)));
  std::vector<UserMeta> pool;
  pool.reserve(pool_size);
  for (std::size_t i = 0; i < pool_size; ++i) pool.push_back(make_user(g, "u" + std::to_string(i), params, 1.0));
  std::vector<UserMeta> seeds;
  for (int i = 0; i < c.seed_accounts; ++i) {
    seeds.push_back(make_user(g, "s" + std::to_string(i), params, c.seed_follower_boost));
  }
  auto pick_pool = [&](double concentration) -> const UserMeta& {
    const auto idx = static_cast<std::size_t>(std::pow(uniform(g), concentration) * static_cast<double>(pool.size()));
    return pool[std::min(idx, pool.size() - 1)];
  };
  auto pick_target = [&]() -> const UserMeta& {
    if (bernoulli(g, c.seed_share)) return seeds[static_cast<std::size_t>(uniform(g) * seeds.size())];
    return pick_pool(1.0);
  };

  const ZipfSampler word_sampler(std::min(params.vocabulary_size, vocabulary.words.size()), params.zipf_exponent);
  const ZipfSampler tag_sampler(kCoTagCount, 1.0);

  const auto n_pre = static_cast<std::int64_t>(std::llround(c.pre_trend_fraction * static_cast<double>(n)));
  out.tweets.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    TweetRecord t;
    if (k < n_pre) {
      t.timestamp = trending_time - 1 - truncated_exponential(g, c.rise_hours * 3600, kSpanSeconds - 1);
    } else {
      t.timestamp = trending_time + truncated_exponential(g, c.decay_hours * 3600, kSpanSeconds);
    }
    t.sender = pick_pool(c.sender_concentration);
    t.is_retweet = bernoulli(g, rt);
    if (t.is_retweet) {
      t.originator = pick_target();
      t.mentions.push_back(t.originator->user_id);
    } else {
      t.is_reply = bernoulli(g, reply_given_original);
    }
    for (int m = poisson(g, mentions); m > 0; --m) t.mentions.push_back(pick_target().user_id);
    t.hashtags.push_back(out.trend.hashtag);
    for (int h = poisson(g, tags - 1); h > 0; --h) t.hashtags.push_back("tag" + std::to_string(tag_sampler(g)));
    t.url_count = poisson(g, urls);
    for (int w = std::max(1, poisson(g, words)); w > 0; --w) t.tokens.push_back(vocabulary.words[word_sampler(g)]);
    if (bernoulli(g, params.emoticon_rate)) {
      t.emoticon_tokens.push_back(vocabulary.emoticons[static_cast<std::size_t>(uniform(g) * vocabulary.emoticons.size())]);
    }
    out.tweets.push_back(std::move(t));
  }
  std::stable_sort(out.tweets.begin(), out.tweets.end(),
                   [](const TweetRecord& a, const TweetRecord& b) { return a.timestamp < b.timestamp; });
  for (std::size_t i = 0; i < out.tweets.size(); ++i) out.tweets[i].id = out.trend.hashtag + "-" + std::to_string(i);
  return out;
}

std::vector<SyntheticTrend> generate_corpus(int n_promoted, int n_organic, const SynthParams& params,
                                            const Vocabulary& vocabulary, std::uint64_t seed) {
  if (n_promoted < 1 || n_organic < 1) throw InvalidArgument("both class counts must be at least 1");
  params.validate();
  const auto total = static_cast<std::size_t>(n_promoted + n_organic);
  // labels are dealt in a seeded order so names and times carry no class information
  std::vector<std::size_t> order(total);
  for (std::size_t i = 0; i < total; ++i) order[i] = i;
  seeded_shuffle(order, derive_seed(seed, std::string_view("labels")));
  std::vector<SyntheticTrend> out(total);
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const Label label = order[idx] < static_cast<std::size_t>(n_promoted) ? Label::promoted : Label::organic;
    char name[32];
    std::snprintf(name, sizeof name, "trend%05zu", idx);
    try {
      out[idx] = generate_trend(label, params, vocabulary, derive_seed(seed, static_cast<std::uint64_t>(idx)), name,
                                params.epoch + static_cast<Timestamp>(idx) * params.trend_spacing);
    } catch (...) {
#pragma omp critical(synth_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

void write_corpus(const std::filesystem::path& dir, const std::vector<SyntheticTrend>& corpus) {
  std::string manifest;
  std::set<std::string> seen;
  for (const auto& t : corpus) {
    if (!seen.insert(t.trend.hashtag).second) throw DuplicateError("#" + t.trend.hashtag);
    manifest += trend_to_json(t.trend).dump() + '\n';
    std::string lines;
    for (const auto& tweet : t.tweets) lines += tweet_to_json(tweet).dump() + '\n';
    write_file(tweet_file(dir, t.trend.hashtag), lines);
  }
  write_file(dir / "manifest.jsonl", manifest);
}

}  // namespace campaign
