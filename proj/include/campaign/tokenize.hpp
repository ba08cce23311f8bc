#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace campaign {

struct TokenizedText {
  std::vector<std::string> tokens;     // lowercased words, entities removed
  std::vector<std::string> emoticons;  // matched verbatim
};

/// True when the whole token matches the fixed emoticon pattern table.
bool is_emoticon(std::string_view token);

/// Emoticons are matched first on whitespace-separated chunks; what remains is
/// split on punctuation and lowercased. Hashtags, mentions and URLs are dropped
/// since they are carried by dedicated record fields.
TokenizedText tokenize(std::string_view text);

}  // namespace campaign
