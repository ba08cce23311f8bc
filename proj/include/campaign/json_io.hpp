#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "campaign/types.hpp"

namespace campaign {

using Json = nlohmann::json;

// Record <-> JSON. The tweet reader accepts either pre-tokenized records
// ("tokens"/"emoticon_tokens") or raw "text", which is tokenized here.
Json tweet_to_json(const TweetRecord& tweet);
TweetRecord tweet_from_json(const Json& j);
Json user_to_json(const UserMeta& user);
UserMeta user_from_json(const Json& j);
Json trend_to_json(const TrendRecord& trend);
TrendRecord trend_from_json(const Json& j);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

/// 64-bit FNV-1a, stable across platforms; used for provenance hashes and seeds.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t basis = 0xcbf29ce484222325ULL);

/// Combines a seed with a key into an independent stream seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view key);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace campaign
