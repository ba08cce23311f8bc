#include "campaign/tokenize.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>

namespace campaign {
namespace {

const std::array<std::regex, 4>& emoticon_patterns() {
  static const std::array<std::regex, 4> patterns = {
      std::regex(R"([:;=][-o*'^]?[)\]}>dDpP3*]|8-?\))"),  // :) ;-) :D :P 8)
      std::regex(R"([(\[{<][-o*'^]?[:;=])"),               // (: (-;
      std::regex(R"([:;=][-o*'^]?[(\[{</\\|@]|[dD]-?:)"),  // :( :/ :| D:
      std::regex(R"(<3+|</3|:'\(|:'\)|xD|XD|\^_?\^|-_-|T_T|o_O|O_o)"),
  };

  return patterns;
}

bool is_word_char(unsigned char c) { return std::isalnum(c) || c == '\'' || c >= 0x80; }

}  // namespace

bool is_emoticon(std::string_view token) {
  if (token.empty() || token.size() > 4) return false;
  if (token != "xD" && token != "XD" &&
      std::all_of(token.begin(), token.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); })) {
    return false;
  }
  for (const auto& pattern : emoticon_patterns()) {
    if (std::regex_match(token.begin(), token.end(), pattern)) return true;
  }
  return false;
}

TokenizedText tokenize(std::string_view text) {
  TokenizedText out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) break;
    std::string_view chunk = text.substr(pos, end - pos);
    pos = end;

    if (is_emoticon(chunk)) {
      out.emoticons.emplace_back(chunk);
      continue;
    }
    if (chunk.front() == '#' || chunk.front() == '@' || chunk.starts_with("http://") ||
        chunk.starts_with("https://") || chunk.starts_with("www.")) {
      continue;
    }

    std::string word;
    auto flush = [&] {
      // strip apostrophes hanging off either end
      while (!word.empty() && word.front() == '\'') word.erase(word.begin());
      while (!word.empty() && word.back() == '\'') word.pop_back();
      if (!word.empty()) out.tokens.push_back(std::move(word));
      word.clear();
    };
    for (char ch : chunk) {
      auto c = static_cast<unsigned char>(ch);
      if (is_word_char(c)) {
        word.push_back(static_cast<char>(std::tolower(c)));
      } else {
        flush();
      }
    }
    flush();
  }
  return out;
}

}  // namespace campaign
