#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace campaign {

using Timestamp = std::int64_t;  // epoch seconds, UTC

enum class Label { promoted, organic };

std::string_view to_string(Label label);
Label parse_label(std::string_view text);

inline bool is_promoted(Label label) { return label == Label::promoted; }

/// Base of every error the library throws on bad input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed record; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : DataError(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateError : public DataError {
 public:
  explicit DuplicateError(const std::string& key)
      : DataError("duplicate hashtag: " + key), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class RangeError : public DataError {
 public:
  using DataError::DataError;
};

/// Caller supplied an argument outside an operation's contract.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct UserMeta {
  std::string user_id;
  std::int64_t followers = 0;
  std::int64_t followees = 0;
  std::int64_t favorites = 0;
  std::int64_t statuses = 0;
  std::int64_t listed = 0;

  bool operator==(const UserMeta&) const = default;
};

struct TweetRecord {
  std::string id;
  Timestamp timestamp = 0;
  std::vector<std::string> hashtags;  // lowercase, without '#'
  std::vector<std::string> mentions;  // user ids
  std::int64_t url_count = 0;
  std::vector<std::string> tokens;
  std::vector<std::string> emoticon_tokens;
  bool is_retweet = false;
  UserMeta sender;
  std::optional<UserMeta> originator;  // present iff is_retweet
  bool is_reply = false;

  bool operator==(const TweetRecord&) const = default;
};

struct TrendRecord {
  std::string hashtag;
  Timestamp trending_time = 0;
  Label label = Label::organic;

  bool operator==(const TrendRecord&) const = default;
};

}  // namespace campaign
