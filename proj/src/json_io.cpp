#include "campaign/json_io.hpp"

#include <fstream>
#include <sstream>

#include "campaign/ingest.hpp"
#include "campaign/tokenize.hpp"

namespace campaign {
namespace {

std::int64_t non_negative(const Json& j, const char* key) {
  if (!j.contains(key)) return 0;
  auto v = j.at(key).get<std::int64_t>();
  if (v < 0) throw DataError(std::string("negative count for ") + key);
  return v;
}

std::vector<std::string> string_list(const Json& j, const char* key, const char* alt) {
  const Json* node = nullptr;
  if (j.contains(key)) {
    node = &j.at(key);
  } else if (alt && j.contains(alt)) {
    node = &j.at(alt);
  }
  if (!node || node->is_null()) return {};
  return node->get<std::vector<std::string>>();
}

}  // namespace

std::string_view to_string(Label label) {
  return label == Label::promoted ? "promoted" : "organic";
}

Label parse_label(std::string_view text) {
  if (text == "promoted") return Label::promoted;
  if (text == "organic") return Label::organic;
  throw DataError("unknown label: " + std::string(text));
}

Json user_to_json(const UserMeta& user) {
  return Json{{"user_id", user.user_id},     {"followers", user.followers},
              {"followees", user.followees}, {"favorites", user.favorites},
              {"statuses", user.statuses},   {"listed", user.listed}};
}

UserMeta user_from_json(const Json& j) {
  UserMeta user;
  user.user_id = j.at("user_id").get<std::string>();
  user.followers = non_negative(j, "followers");
  user.followees = non_negative(j, "followees");
  user.favorites = non_negative(j, "favorites");
  user.statuses = non_negative(j, "statuses");
  user.listed = non_negative(j, "listed");
  return user;
}

Json tweet_to_json(const TweetRecord& tweet) {
  Json j{{"id", tweet.id},
         {"timestamp", tweet.timestamp},
         {"hashtag_list", tweet.hashtags},
         {"mention_list", tweet.mentions},
         {"url_count", tweet.url_count},
         {"tokens", tweet.tokens},
         {"emoticon_tokens", tweet.emoticon_tokens},
         {"is_retweet", tweet.is_retweet},
         {"is_reply", tweet.is_reply},
         {"sender", user_to_json(tweet.sender)}};
  if (tweet.originator) j["originator"] = user_to_json(*tweet.originator);
  return j;
}

TweetRecord tweet_from_json(const Json& j) {
  TweetRecord t;
  t.id = j.at("id").is_string() ? j.at("id").get<std::string>() : j.at("id").dump();
  t.timestamp = j.at("timestamp").get<Timestamp>();
  if (t.timestamp <= 0) throw DataError("timestamp must be positive");
  for (auto& tag : string_list(j, "hashtag_list", "hashtags")) t.hashtags.push_back(normalize_hashtag(tag));
  t.mentions = string_list(j, "mention_list", "mentions");
  t.url_count = non_negative(j, "url_count");
  if (j.contains("tokens")) {
    t.tokens = string_list(j, "tokens", nullptr);
    t.emoticon_tokens = string_list(j, "emoticon_tokens", nullptr);
  } else if (j.contains("text")) {
    auto tok = tokenize(j.at("text").get<std::string>());
    t.tokens = std::move(tok.tokens);
    t.emoticon_tokens = std::move(tok.emoticons);
  }
  t.is_retweet = j.value("is_retweet", false);
  t.is_reply = j.value("is_reply", false);
  t.sender = user_from_json(j.at("sender"));
  if (j.contains("originator") && !j.at("originator").is_null()) {
    t.originator = user_from_json(j.at("originator"));
  }
  if (t.is_retweet != t.originator.has_value()) {
    throw DataError("originator must be present exactly when is_retweet is true");
  }
  return t;
}

Json trend_to_json(const TrendRecord& trend) {
  return Json{{"hashtag", trend.hashtag},
              {"trending_time", trend.trending_time},
              {"label", std::string(to_string(trend.label))}};
}

TrendRecord trend_from_json(const Json& j) {
  TrendRecord r;
  r.hashtag = normalize_hashtag(j.at("hashtag").get<std::string>());
  if (r.hashtag.empty()) throw DataError("empty hashtag");
  r.trending_time = j.at("trending_time").get<Timestamp>();
  if (r.trending_time <= 0) throw DataError("trending_time must be positive");
  r.label = parse_label(j.at("label").get<std::string>());
  return r;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << content;
  if (!out) throw DataError("write failed for " + path.string());
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view key) {
  // splitmix64 finalizer over the FNV hash so nearby keys decorrelate
  std::uint64_t z = fnv1a(key, seed ^ 0xcbf29ce484222325ULL) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return derive_seed(seed, std::string_view(std::to_string(index)));
}

}  // namespace campaign
