#include "campaign/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "campaign/graph.hpp"
#include "campaign/stats.hpp"

namespace campaign {
namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

constexpr std::array<std::string_view, 5> kUserFields = {"followers", "followees", "favorites", "statuses",
                                                         "listed"};
constexpr std::array<std::string_view, 4> kLexiconScores = {"happiness", "valence", "arousal", "dominance"};
constexpr std::array<std::string_view, TweetProfile::kSentimentQuantities> kSentimentNames = {
    "happiness", "valence", "arousal", "dominance", "polarization", "polarization_entropy",
    "positive_emoticon_entropy", "negative_emoticon_entropy", "emoticon_entropy", "positive_ratio",
    "positive_emoticons", "negative_emoticons", "total_emoticons"};

void add_summary_names(std::vector<std::string>& names, const std::string& base) {
  for (auto stat : kSummaryStatNames) names.push_back(base + "." + std::string(stat));
}

struct Registry {
  std::vector<std::string> names;
  std::vector<FeatureClass> classes;
  std::unordered_map<std::string, std::size_t> index;
};

const Registry& registry() {
  static const Registry reg = [] {
    Registry r;
    auto mark = [&](FeatureClass c) { r.classes.resize(r.names.size(), c); };
    for (auto kind : {NetworkKind::retweet, NetworkKind::mention, NetworkKind::hashtag}) {
      const std::string prefix = "network." + std::string(to_string(kind)) + ".";
      for (const auto& n : network_feature_names(is_directed(kind))) r.names.push_back(prefix + n);
    }
    mark(FeatureClass::network);
    for (auto role : {"sender", "originator"}) {
      for (auto field : kUserFields) add_summary_names(r.names, std::string("user.") + role + "." + std::string(field));
    }
    mark(FeatureClass::user);
    r.names.emplace_back("timing.tweet_count");
    for (auto stream : {"all", "retweet", "mention"}) add_summary_names(r.names, std::string("timing.gap.") + stream);
    mark(FeatureClass::timing);
    for (auto q : {"hashtags", "mentions", "urls"}) add_summary_names(r.names, std::string("content.") + q);
    for (auto tag : kPosTagNames) add_summary_names(r.names, "content.pos_frequency." + std::string(tag));
    for (auto tag : kPosTagNames) add_summary_names(r.names, "content.pos_proportion." + std::string(tag));
    add_summary_names(r.names, "content.words");
    add_summary_names(r.names, "content.word_entropy");
    mark(FeatureClass::content);
    for (auto s : kLexiconScores) {
      r.names.push_back("sentiment.aggregate." + std::string(s) + ".mean");
      r.names.push_back("sentiment.aggregate." + std::string(s) + ".std");
    }
    for (auto s : kSentimentNames) add_summary_names(r.names, "sentiment.tweet." + std::string(s));
    r.names.emplace_back("sentiment.emoticon_tweet_ratio");
    mark(FeatureClass::sentiment);
    for (std::size_t i = 0; i < r.names.size(); ++i) r.index.emplace(r.names[i], i);
    return r;
  }();
  return reg;
}

void append_summary(std::vector<double>& out, std::vector<double>& values) {
  const auto s = summarize8_inplace(values);
  for (double v : s.as_array()) out.push_back(v);
}

template <typename Fn>
void append_summary_of(std::vector<double>& out, std::span<const TweetProfile* const> profiles, Fn&& get,
                       std::vector<double>& scratch) {
  scratch.clear();
  for (const auto* p : profiles) {
    double v = get(*p);
    if (!std::isnan(v)) scratch.push_back(v);
  }
  append_summary(out, scratch);
}

std::pair<double, double> mean_std(std::span<const double> v) {
  if (v.empty()) return {0.0, 0.0};
  double sum = 0;
  for (double x : v) sum += x;
  const double mean = sum / static_cast<double>(v.size());
  double ss = 0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(v.size()))};
}

double distinct_token_entropy(std::span<const std::string> tokens) {
  if (tokens.empty()) return 0.0;
  std::map<std::string_view, std::int64_t> counts;
  for (const auto& t : tokens) ++counts[t];
  std::vector<std::int64_t> c;
  c.reserve(counts.size());
  for (auto& [_, n] : counts) c.push_back(n);
  return categorical_entropy(c);
}

double mean_or_missing(std::span<const double> v) {
  if (v.empty()) return kMissing;
  double sum = 0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

std::vector<const TweetProfile*> pointers(const std::vector<TweetProfile>& profiles) {
  std::vector<const TweetProfile*> out;
  out.reserve(profiles.size());
  for (const auto& p : profiles) out.push_back(&p);
  return out;
}

}  // namespace

std::string_view to_string(FeatureClass c) {
  switch (c) {
    case FeatureClass::network: return "network";
    case FeatureClass::user: return "user";
    case FeatureClass::timing: return "timing";
    case FeatureClass::content: return "content";
    case FeatureClass::sentiment: return "sentiment";
  }
  return "unknown";
}

const std::vector<std::string>& feature_names() { return registry().names; }

std::size_t feature_index(std::string_view name) {
  const auto& idx = registry().index;
  auto it = idx.find(std::string(name));
  if (it == idx.end()) throw InvalidArgument("unknown feature: " + std::string(name));
  return it->second;
}

FeatureClass feature_class(std::size_t index) { return registry().classes.at(index); }

std::array<std::size_t, 5> feature_class_counts() {
  std::array<std::size_t, 5> counts{};
  for (auto c : registry().classes) ++counts[static_cast<std::size_t>(c)];
  return counts;
}

TweetProfile profile_tweet(const TweetRecord& t, const Lexicons& lex) {
  TweetProfile p;
  p.hashtags = static_cast<double>(t.hashtags.size());
  p.mentions = static_cast<double>(t.mentions.size());
  p.urls = static_cast<double>(t.url_count);
  p.words = static_cast<double>(t.tokens.size());
  p.word_entropy = distinct_token_entropy(t.tokens);

  double tagged = 0;
  double pos_strength = 0, neg_strength = 0;
  std::int64_t pos_hits = 0, neg_hits = 0;
  for (const auto& tok : t.tokens) {
    if (const PosTag* tag = lex.pos(tok)) {
      p.pos_count[static_cast<std::size_t>(*tag)] += 1;
      tagged += 1;
    }
    if (const double* h = lex.happiness(tok)) p.happiness_tokens.push_back(*h);
    if (const VadScore* v = lex.vad(tok)) {
      p.valence_tokens.push_back(v->valence);
      p.arousal_tokens.push_back(v->arousal);
      p.dominance_tokens.push_back(v->dominance);
    }
    if (const PolarityEntry* e = lex.polarity(tok)) {
      if (e->polarity == Polarity::positive) {
        pos_strength += e->strength;
        ++pos_hits;
      } else {
        neg_strength += e->strength;
        ++neg_hits;
      }
    }
  }
  for (std::size_t k = 0; k < kPosTagCount; ++k) p.pos_proportion[k] = tagged > 0 ? p.pos_count[k] / tagged : 0.0;

  std::map<std::string_view, std::int64_t> pos_emo, neg_emo, all_emo;
  std::int64_t n_pos_emo = 0, n_neg_emo = 0;
  for (const auto& e : t.emoticon_tokens) {
    ++all_emo[e];
    if (const Polarity* pol = lex.emoticon(e)) {
      if (*pol == Polarity::positive) {
        ++pos_emo[e];
        ++n_pos_emo;
      } else {
        ++neg_emo[e];
        ++n_neg_emo;
      }
    }
  }
  auto entropy_of = [](const std::map<std::string_view, std::int64_t>& m) {
    std::vector<std::int64_t> c;
    for (auto& [_, n] : m) c.push_back(n);
    return categorical_entropy(c);
  };

  auto& s = p.sentiment;
  s[TweetProfile::happiness] = mean_or_missing(p.happiness_tokens);
  s[TweetProfile::valence] = mean_or_missing(p.valence_tokens);
  s[TweetProfile::arousal] = mean_or_missing(p.arousal_tokens);
  s[TweetProfile::dominance] = mean_or_missing(p.dominance_tokens);
  const bool has_polarity = pos_hits + neg_hits > 0;
  s[TweetProfile::polarization] = has_polarity ? pos_strength - neg_strength : kMissing;
  const std::array<std::int64_t, 2> hits = {pos_hits, neg_hits};
  s[TweetProfile::polarization_entropy] = has_polarity ? categorical_entropy(hits) : kMissing;
  s[TweetProfile::positive_ratio] =
      has_polarity && pos_strength + neg_strength > 0 ? pos_strength / (pos_strength + neg_strength) : kMissing;
  s[TweetProfile::positive_emoticon_entropy] = entropy_of(pos_emo);
  s[TweetProfile::negative_emoticon_entropy] = entropy_of(neg_emo);
  s[TweetProfile::emoticon_entropy] = entropy_of(all_emo);
  s[TweetProfile::positive_emoticons] = static_cast<double>(n_pos_emo);
  s[TweetProfile::negative_emoticons] = static_cast<double>(n_neg_emo);
  s[TweetProfile::total_emoticons] = static_cast<double>(t.emoticon_tokens.size());
  p.has_emoticon = !t.emoticon_tokens.empty();
  return p;
}

std::vector<double> network_family(std::span<const TweetRecord> tweets) {
  std::vector<double> out;
  out.reserve(kNetworkFeatureCount);
  for (auto kind : {NetworkKind::retweet, NetworkKind::mention, NetworkKind::hashtag}) {
    auto f = network_features(build_network(tweets, kind));
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

std::vector<double> user_features(std::span<const TweetRecord> tweets) {
  std::vector<double> out;
  out.reserve(kUserFeatureCount);
  std::vector<double> scratch;
  auto field = [](const UserMeta& u, std::size_t k) -> double {
    switch (k) {
      case 0: return static_cast<double>(u.followers);
      case 1: return static_cast<double>(u.followees);
      case 2: return static_cast<double>(u.favorites);
      case 3: return static_cast<double>(u.statuses);
      default: return static_cast<double>(u.listed);
    }
  };
  for (std::size_t k = 0; k < kUserFields.size(); ++k) {
    scratch.clear();
    for (const auto& t : tweets) scratch.push_back(field(t.sender, k));
    append_summary(out, scratch);
  }
  for (std::size_t k = 0; k < kUserFields.size(); ++k) {
    scratch.clear();
    for (const auto& t : tweets) {
      if (t.is_retweet && t.originator) scratch.push_back(field(*t.originator, k));
    }
    append_summary(out, scratch);
  }
  return out;
}

std::vector<double> timing_features(std::span<const TweetRecord> tweets) {
  std::vector<double> out;
  out.reserve(kTimingFeatureCount);
  out.push_back(static_cast<double>(tweets.size()));
  std::vector<Timestamp> all, retweets, mentions;
  for (const auto& t : tweets) {
    all.push_back(t.timestamp);
    if (t.is_retweet) retweets.push_back(t.timestamp);
    if (!t.mentions.empty()) mentions.push_back(t.timestamp);
  }
  std::vector<double> gaps;
  for (auto* stream : {&all, &retweets, &mentions}) {
    std::sort(stream->begin(), stream->end());
    gaps.clear();
    for (std::size_t i = 1; i < stream->size(); ++i) gaps.push_back(static_cast<double>((*stream)[i] - (*stream)[i - 1]));
    append_summary(out, gaps);
  }
  return out;
}

std::vector<double> content_from_profiles(std::span<const TweetProfile* const> profiles) {
  std::vector<double> out;
  out.reserve(kContentFeatureCount);
  std::vector<double> scratch;
  scratch.reserve(profiles.size());
  append_summary_of(out, profiles, [](const TweetProfile& p) { return p.hashtags; }, scratch);
  append_summary_of(out, profiles, [](const TweetProfile& p) { return p.mentions; }, scratch);
  append_summary_of(out, profiles, [](const TweetProfile& p) { return p.urls; }, scratch);
  for (std::size_t k = 0; k < kPosTagCount; ++k) {
    append_summary_of(out, profiles, [k](const TweetProfile& p) { return p.pos_count[k]; }, scratch);
  }
  for (std::size_t k = 0; k < kPosTagCount; ++k) {
    append_summary_of(out, profiles, [k](const TweetProfile& p) { return p.pos_proportion[k]; }, scratch);
  }
  append_summary_of(out, profiles, [](const TweetProfile& p) { return p.words; }, scratch);
  append_summary_of(out, profiles, [](const TweetProfile& p) { return p.word_entropy; }, scratch);
  return out;
}

std::vector<double> sentiment_from_profiles(std::span<const TweetProfile* const> profiles) {
  std::vector<double> out;
  out.reserve(kSentimentFeatureCount);
  std::vector<double> pooled;
  using TokenList = std::vector<double> TweetProfile::*;
  for (TokenList list : {&TweetProfile::happiness_tokens, &TweetProfile::valence_tokens,
                         &TweetProfile::arousal_tokens, &TweetProfile::dominance_tokens}) {
    pooled.clear();
    for (const auto* p : profiles) pooled.insert(pooled.end(), (p->*list).begin(), (p->*list).end());
    auto [mean, sd] = mean_std(pooled);
    out.push_back(mean);
    out.push_back(sd);
  }
  std::vector<double> scratch;
  scratch.reserve(profiles.size());
  for (std::size_t q = 0; q < TweetProfile::kSentimentQuantities; ++q) {
    append_summary_of(out, profiles, [q](const TweetProfile& p) { return p.sentiment[q]; }, scratch);
  }
  std::size_t with_emoticon = 0;
  for (const auto* p : profiles) with_emoticon += p->has_emoticon ? 1 : 0;
  out.push_back(profiles.empty() ? 0.0 : static_cast<double>(with_emoticon) / static_cast<double>(profiles.size()));
  return out;
}

std::vector<double> content_features(std::span<const TweetRecord> tweets, const Lexicons& lexicons) {
  std::vector<TweetProfile> profiles;
  profiles.reserve(tweets.size());
  for (const auto& t : tweets) profiles.push_back(profile_tweet(t, lexicons));
  auto ptrs = pointers(profiles);
  return content_from_profiles(ptrs);
}

std::vector<double> sentiment_features(std::span<const TweetRecord> tweets, const Lexicons& lexicons) {
  std::vector<TweetProfile> profiles;
  profiles.reserve(tweets.size());
  for (const auto& t : tweets) profiles.push_back(profile_tweet(t, lexicons));
  auto ptrs = pointers(profiles);
  return sentiment_from_profiles(ptrs);
}

std::vector<double> window_features(std::span<const TweetRecord> tweets, const Lexicons& lexicons) {
  std::vector<double> out;
  out.reserve(kFeatureCount);
  auto append = [&](const std::vector<double>& part) { out.insert(out.end(), part.begin(), part.end()); };
  append(network_family(tweets));
  append(user_features(tweets));
  append(timing_features(tweets));
  append(content_features(tweets, lexicons));
  append(sentiment_features(tweets, lexicons));
  return out;
}

void FeatureMatrix::set_column(std::size_t c, std::span<const double> column) {
  if (column.size() != rows) throw InvalidArgument("column height mismatch");
  for (std::size_t r = 0; r < rows; ++r) at(r, c) = column[r];
}

std::vector<double> FeatureMatrix::column(std::size_t c) const {
  std::vector<double> out(rows);
  for (std::size_t r = 0; r < rows; ++r) out[r] = at(r, c);
  return out;
}

}  // namespace campaign
