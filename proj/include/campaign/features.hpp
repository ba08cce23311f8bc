#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "campaign/ingest.hpp"
#include "campaign/lexicon.hpp"
#include "campaign/types.hpp"

namespace campaign {

enum class FeatureClass { network, user, timing, content, sentiment };

inline constexpr std::size_t kNetworkFeatureCount = 101;
inline constexpr std::size_t kUserFeatureCount = 80;
inline constexpr std::size_t kTimingFeatureCount = 25;
inline constexpr std::size_t kContentFeatureCount = 168;
inline constexpr std::size_t kSentimentFeatureCount = 113;
inline constexpr std::size_t kFeatureCount = kNetworkFeatureCount + kUserFeatureCount + kTimingFeatureCount +
                                             kContentFeatureCount + kSentimentFeatureCount;
static_assert(kFeatureCount == 487);

std::string_view to_string(FeatureClass c);

/// Dotted identifiers of every feature, in emission order:
/// network (retweet, mention, hashtag), user, timing, content, sentiment.
const std::vector<std::string>& feature_names();
/// Throws InvalidArgument for unknown names.
std::size_t feature_index(std::string_view name);
FeatureClass feature_class(std::size_t index);
/// Number of registry entries per class, in FeatureClass order.
std::array<std::size_t, 5> feature_class_counts();

/// Per-tweet scalars consumed by the content and sentiment families.
struct TweetProfile {
  static constexpr std::size_t kSentimentQuantities = 13;
  // Indices into `sentiment`; NaN marks "no lexicon coverage" (tweet skipped).
  enum Sentiment : std::size_t {
    happiness, valence, arousal, dominance, polarization, polarization_entropy,
    positive_emoticon_entropy, negative_emoticon_entropy, emoticon_entropy,
    positive_ratio, positive_emoticons, negative_emoticons, total_emoticons
  };

  double hashtags = 0;
  double mentions = 0;
  double urls = 0;
  double words = 0;
  double word_entropy = 0;
  std::array<double, kPosTagCount> pos_count{};
  std::array<double, kPosTagCount> pos_proportion{};
  std::array<double, kSentimentQuantities> sentiment{};
  bool has_emoticon = false;
  // token-level lexicon scores, pooled across a window for the aggregate block
  std::vector<double> happiness_tokens;
  std::vector<double> valence_tokens;
  std::vector<double> arousal_tokens;
  std::vector<double> dominance_tokens;
};

TweetProfile profile_tweet(const TweetRecord& tweet, const Lexicons& lexicons);

// Feature families over one window of tweets. Output widths are fixed.
std::vector<double> network_family(std::span<const TweetRecord> tweets);  // 101
std::vector<double> user_features(std::span<const TweetRecord> tweets);    // 80
std::vector<double> timing_features(std::span<const TweetRecord> tweets);  // 25
std::vector<double> content_features(std::span<const TweetRecord> tweets, const Lexicons& lexicons);    // 168
std::vector<double> sentiment_features(std::span<const TweetRecord> tweets, const Lexicons& lexicons);  // 113

/// Profile-based variants shared by both extraction paths.
std::vector<double> content_from_profiles(std::span<const TweetProfile* const> profiles);
std::vector<double> sentiment_from_profiles(std::span<const TweetProfile* const> profiles);

/// All 487 features of one window, registry order.
std::vector<double> window_features(std::span<const TweetRecord> tweets, const Lexicons& lexicons);

/// Row-major feature x time matrix.
struct FeatureMatrix {
  std::size_t rows = kFeatureCount;
  std::size_t cols = 0;
  std::vector<double> values;

  FeatureMatrix() = default;
  FeatureMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), values(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  std::span<const double> row(std::size_t r) const { return {values.data() + r * cols, cols}; }
  void set_column(std::size_t c, std::span<const double> column);
  std::vector<double> column(std::size_t c) const;

  bool operator==(const FeatureMatrix&) const = default;
};

/// Parallel over windows. Column j holds the features of windows[j].
FeatureMatrix extract_matrix(std::span<const TweetRecord> tweets, std::span<const WindowSlice> windows,
                             const Lexicons& lexicons);

}  // namespace campaign
