#include "campaign/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "campaign/json_io.hpp"

namespace campaign {
namespace {

// Calls `fn(json, line_number)` for every non-blank line.
template <typename Fn>
void for_each_json_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what(), line_no);
    }
    try {
      fn(j, line_no);
    } catch (const ParseError&) {
      throw;
    } catch (const DuplicateError&) {
      throw;
    } catch (const Json::exception& e) {
      throw ParseError(std::string("bad record: ") + e.what(), line_no);
    } catch (const DataError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
}

}  // namespace

void WindowingConfig::validate() const {
  if (window_length <= 0) throw InvalidArgument("window length must be positive");
  if (slide <= 0) throw InvalidArgument("slide must be positive");
  if (slide % 60 != 0) throw InvalidArgument("slide must be a whole number of minutes");
  if (series_length <= 0) throw InvalidArgument("series length must be positive");
  if (points_before_trending < 0 || points_before_trending > series_length) {
    throw InvalidArgument("points_before_trending out of range");
  }
}

std::string normalize_hashtag(std::string_view tag) {
  if (!tag.empty() && tag.front() == '#') tag.remove_prefix(1);
  std::string out(tag);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<TrendRecord> parse_manifest(std::string_view text) {
  std::vector<TrendRecord> out;
  std::unordered_set<std::string> seen;
  for_each_json_line(text, [&](const Json& j, std::size_t) {
    TrendRecord r = trend_from_json(j);
    if (!seen.insert(r.hashtag).second) throw DuplicateError("#" + r.hashtag);
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<TrendRecord> load_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_file(path));
}

std::vector<TweetRecord> parse_tweets(std::string_view text, std::string_view hashtag,
                                      Timestamp center, Timestamp half_span) {
  const std::string wanted = normalize_hashtag(hashtag);
  std::vector<TweetRecord> out;
  for_each_json_line(text, [&](const Json& j, std::size_t) {
    TweetRecord t = tweet_from_json(j);
    Timestamp gap = t.timestamp > center ? t.timestamp - center : center - t.timestamp;
    if (gap > half_span) return;
    if (std::find(t.hashtags.begin(), t.hashtags.end(), wanted) == t.hashtags.end()) return;
    out.push_back(std::move(t));
  });
  std::stable_sort(out.begin(), out.end(),
                   [](const TweetRecord& a, const TweetRecord& b) { return a.timestamp < b.timestamp; });
  return out;
}

std::vector<TweetRecord> load_tweets(const std::filesystem::path& path, std::string_view hashtag,
                                     Timestamp center, Timestamp half_span) {
  return parse_tweets(read_file(path), hashtag, center, half_span);
}

std::vector<WindowSlice> window_slices(std::span<const TweetRecord> tweets,
                                       const WindowingConfig& config, Timestamp trending_time) {
  config.validate();
  std::vector<WindowSlice> windows(static_cast<std::size_t>(config.series_length));
  for (int i = 0; i < config.series_length; ++i) {
    auto& w = windows[static_cast<std::size_t>(i)];
    w.end = trending_time + static_cast<Timestamp>(i - config.points_before_trending + 1) * config.slide;
    w.start = w.end - config.window_length;
    auto first = std::lower_bound(tweets.begin(), tweets.end(), w.start,
                                  [](const TweetRecord& t, Timestamp v) { return t.timestamp < v; });
    auto last = std::lower_bound(first, tweets.end(), w.end,
                                 [](const TweetRecord& t, Timestamp v) { return t.timestamp < v; });
    w.tweet_indices.reserve(static_cast<std::size_t>(last - first));
    for (auto it = first; it != last; ++it) {
      w.tweet_indices.push_back(static_cast<std::size_t>(it - tweets.begin()));
    }
  }
  return windows;
}

int observation_end_index(int delay_minutes, const WindowingConfig& config) {
  const int step = config.slide_minutes();
  if (step <= 0 || delay_minutes % step != 0) {
    throw InvalidArgument("delay " + std::to_string(delay_minutes) + " min is not a multiple of the " +
                          std::to_string(step) + " min slide");
  }
  return config.points_before_trending - 1 + delay_minutes / step;
}

std::vector<double> select_observation(std::span<const double> series, int delay_minutes, int length,
                                       const WindowingConfig& config) {
  if (length <= 0) throw InvalidArgument("observation length must be positive");
  const int end = observation_end_index(delay_minutes, config);
  const int begin = end - length + 1;
  if (begin < 0 || end >= static_cast<int>(series.size())) {
    throw RangeError("observation [" + std::to_string(begin) + ", " + std::to_string(end) +
                     "] outside series of length " + std::to_string(series.size()));
  }
  return {series.begin() + begin, series.begin() + end + 1};
}

}  // namespace campaign
