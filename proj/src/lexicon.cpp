#include "campaign/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <vector>

#include "campaign/json_io.hpp"
#include "campaign/types.hpp"

namespace campaign {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto tab = line.find('\t', pos);
    out.push_back(line.substr(pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return out;
}

double parse_real(std::string_view field, std::size_t line) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("not a number: '" + std::string(field) + "'", line);
  }
  return v;
}

Polarity parse_polarity(std::string_view field, std::size_t line) {
  auto f = lower(field);
  if (f == "positive" || f == "pos" || f == "+") return Polarity::positive;
  if (f == "negative" || f == "neg" || f == "-") return Polarity::negative;
  throw ParseError("unknown polarity '" + std::string(field) + "'", line);
}

// Calls fn(fields, line_no) for each non-empty, non-comment line.
template <typename Fn>
void for_each_row(std::string_view text, std::size_t min_fields, Fn&& fn) {
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() < min_fields || fields[0].empty()) {
      throw ParseError("expected " + std::to_string(min_fields) + " tab-separated fields", line_no);
    }
    fn(fields, line_no);
  }
}

}  // namespace

std::optional<PosTag> parse_pos_tag(std::string_view tag) {
  const std::string t = lower(tag);
  for (std::size_t i = 0; i < kPosTagCount; ++i) {
    if (t == kPosTagNames[i]) return static_cast<PosTag>(i);
  }
  if (t == "md") return PosTag::modal;
  if (t == "pdt") return PosTag::predeterminer;
  if (t == "uh") return PosTag::interjection;
  if (t.starts_with("vb")) return PosTag::verb;
  if (t.starts_with("nn")) return PosTag::noun;
  if (t.starts_with("jj")) return PosTag::adjective;
  if (t.starts_with("rb") || t == "wrb") return PosTag::adverb;
  if (t.starts_with("prp") || t.starts_with("wp")) return PosTag::pronoun;
  return std::nullopt;
}

void Lexicons::add_pos(std::string_view word, PosTag tag) { pos_[lower(word)] = tag; }
void Lexicons::add_happiness(std::string_view word, double score) { happiness_[lower(word)] = score; }
void Lexicons::add_vad(std::string_view word, VadScore score) { vad_[lower(word)] = score; }
void Lexicons::add_polarity(std::string_view word, PolarityEntry entry) { polarity_[lower(word)] = entry; }
void Lexicons::add_emoticon(std::string_view token, Polarity polarity) {
  emoticons_[std::string(token)] = polarity;
}

namespace {
template <typename Map>
const typename Map::mapped_type* find_lower(const Map& map, std::string_view word) {
  if (map.empty()) return nullptr;
  bool has_upper = std::any_of(word.begin(), word.end(), [](unsigned char c) { return std::isupper(c); });
  auto it = has_upper ? map.find(lower(word)) : map.find(std::string(word));
  return it == map.end() ? nullptr : &it->second;
}
}  // namespace

const PosTag* Lexicons::pos(std::string_view word) const { return find_lower(pos_, word); }
const double* Lexicons::happiness(std::string_view word) const { return find_lower(happiness_, word); }
const VadScore* Lexicons::vad(std::string_view word) const { return find_lower(vad_, word); }
const PolarityEntry* Lexicons::polarity(std::string_view word) const { return find_lower(polarity_, word); }

const Polarity* Lexicons::emoticon(std::string_view token) const {
  auto it = emoticons_.find(std::string(token));
  if (it != emoticons_.end()) return &it->second;
  return find_lower(emoticons_, token);
}

std::size_t Lexicons::size() const {
  return pos_.size() + happiness_.size() + vad_.size() + polarity_.size() + emoticons_.size();
}

std::vector<std::string> Lexicons::words() const {
  std::set<std::string> all;
  for (const auto& [w, _] : pos_) all.insert(w);
  for (const auto& [w, _] : happiness_) all.insert(w);
  for (const auto& [w, _] : vad_) all.insert(w);
  for (const auto& [w, _] : polarity_) all.insert(w);
  return {all.begin(), all.end()};
}

std::vector<std::string> Lexicons::emoticon_tokens() const {
  std::vector<std::string> out;
  for (const auto& [e, _] : emoticons_) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

void read_pos_lexicon(std::string_view text, Lexicons& into) {
  for_each_row(text, 2, [&](const auto& f, std::size_t) {
    // tags outside the eight classes are legal; the word stays untagged
    if (auto tag = parse_pos_tag(f[1])) into.add_pos(f[0], *tag);
  });
}

void read_happiness_lexicon(std::string_view text, Lexicons& into) {
  for_each_row(text, 2, [&](const auto& f, std::size_t line) { into.add_happiness(f[0], parse_real(f[1], line)); });
}

void read_vad_lexicon(std::string_view text, Lexicons& into) {
  for_each_row(text, 4, [&](const auto& f, std::size_t line) {
    into.add_vad(f[0], VadScore{parse_real(f[1], line), parse_real(f[2], line), parse_real(f[3], line)});
  });
}

void read_polarity_lexicon(std::string_view text, Lexicons& into) {
  for_each_row(text, 2, [&](const auto& f, std::size_t line) {
    PolarityEntry e{parse_polarity(f[1], line), f.size() > 2 ? parse_real(f[2], line) : 1.0};
    into.add_polarity(f[0], e);
  });
}

void read_emoticon_lexicon(std::string_view text, Lexicons& into) {
  for_each_row(text, 2, [&](const auto& f, std::size_t line) { into.add_emoticon(f[0], parse_polarity(f[1], line)); });
}

Lexicons Lexicons::load_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw DataError("lexicon directory not found: " + dir.string());
  Lexicons lex;
  auto load = [&](std::string_view name, void (*reader)(std::string_view, Lexicons&)) {
    auto path = dir / name;
    if (!std::filesystem::exists(path)) return;
    try {
      reader(read_file(path), lex);
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ": " + e.what(), 0);
    }
  };
  load(kPosFile, read_pos_lexicon);
  load(kHappinessFile, read_happiness_lexicon);
  load(kVadFile, read_vad_lexicon);
  load(kPolarityFile, read_polarity_lexicon);
  load(kEmoticonFile, read_emoticon_lexicon);
  return lex;
}

}  // namespace campaign
