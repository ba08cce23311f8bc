#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "campaign/types.hpp"

namespace campaign {

struct WindowingConfig {
  Timestamp window_length = 21600;  // 6 h
  Timestamp slide = 1200;           // 20 min
  int series_length = 120;
  int points_before_trending = 60;

  void validate() const;
  /// Slide expressed in whole minutes; delays D are multiples of this.
  int slide_minutes() const { return static_cast<int>(slide / 60); }
};

/// Half-open interval [start, end) and the tweets that fall in it.
struct WindowSlice {
  Timestamp start = 0;
  Timestamp end = 0;
  std::vector<std::size_t> tweet_indices;

  bool operator==(const WindowSlice&) const = default;
};

inline constexpr Timestamp kDefaultHalfSpan = 172800;  // two days

/// Lowercases and strips one leading '#'.
std::string normalize_hashtag(std::string_view tag);

std::vector<TrendRecord> load_manifest(const std::filesystem::path& path);
std::vector<TrendRecord> parse_manifest(std::string_view text);

/// Tweets carrying `hashtag` with |timestamp - center| <= half_span, ascending by time.
std::vector<TweetRecord> load_tweets(const std::filesystem::path& path, std::string_view hashtag,
                                     Timestamp center, Timestamp half_span = kDefaultHalfSpan);
std::vector<TweetRecord> parse_tweets(std::string_view text, std::string_view hashtag,
                                      Timestamp center, Timestamp half_span = kDefaultHalfSpan);

/// Window i ends at trending_time + (i - points_before_trending + 1) * slide.
std::vector<WindowSlice> window_slices(std::span<const TweetRecord> tweets,
                                       const WindowingConfig& config, Timestamp trending_time);

/// Index of the last observation point for a delay of `delay_minutes`.
int observation_end_index(int delay_minutes, const WindowingConfig& config = {});

/// The L points ending at delay D: indices [d - L + 1, d].
std::vector<double> select_observation(std::span<const double> series, int delay_minutes,
                                       int length = 35, const WindowingConfig& config = {});

}  // namespace campaign
