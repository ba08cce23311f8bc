#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace campaign {

/// Eight coarse part-of-speech classes. Wh-pronouns fold into `pronoun`.
enum class PosTag : std::uint8_t { verb, noun, adjective, modal, predeterminer, interjection, adverb, pronoun };

inline constexpr std::size_t kPosTagCount = 8;
inline constexpr std::array<std::string_view, kPosTagCount> kPosTagNames = {
    "verb", "noun", "adjective", "modal", "predeterminer", "interjection", "adverb", "pronoun"};

/// Accepts the coarse names above and Penn Treebank tags (VB*, NN*, JJ*, MD,
/// PDT, UH, RB*, PRP*, WP*). Other tags return nullopt (word left untagged).
std::optional<PosTag> parse_pos_tag(std::string_view tag);

enum class Polarity : std::uint8_t { positive, negative };

struct PolarityEntry {
  Polarity polarity = Polarity::positive;
  double strength = 1.0;
};

struct VadScore {
  double valence = 0;
  double arousal = 0;
  double dominance = 0;
};

/// Immutable word tables. Lookups lowercase the key; misses return nullptr.
class Lexicons {
 public:
  // On-disk names inside a lexicon directory.
  static constexpr std::string_view kPosFile = "pos.tsv";
  static constexpr std::string_view kHappinessFile = "happiness.tsv";
  static constexpr std::string_view kVadFile = "vad.tsv";
  static constexpr std::string_view kPolarityFile = "polarity.tsv";
  static constexpr std::string_view kEmoticonFile = "emoticons.tsv";

  /// Loads every table present in `dir`; a missing file leaves that table empty.
  static Lexicons load_directory(const std::filesystem::path& dir);

  void add_pos(std::string_view word, PosTag tag);
  void add_happiness(std::string_view word, double score);
  void add_vad(std::string_view word, VadScore score);
  void add_polarity(std::string_view word, PolarityEntry entry);
  void add_emoticon(std::string_view token, Polarity polarity);

  const PosTag* pos(std::string_view word) const;
  const double* happiness(std::string_view word) const;
  const VadScore* vad(std::string_view word) const;
  const PolarityEntry* polarity(std::string_view word) const;
  /// Emoticons are matched verbatim first, then lowercased.
  const Polarity* emoticon(std::string_view token) const;

  std::size_t size() const;
  /// Sorted union of the word tables.
  std::vector<std::string> words() const;
  std::vector<std::string> emoticon_tokens() const;

 private:
  std::unordered_map<std::string, PosTag> pos_;
  std::unordered_map<std::string, double> happiness_;
  std::unordered_map<std::string, VadScore> vad_;
  std::unordered_map<std::string, PolarityEntry> polarity_;
  std::unordered_map<std::string, Polarity> emoticons_;
};

/// Parsers for the tab-separated formats; errors carry the line number.
void read_pos_lexicon(std::string_view text, Lexicons& into);
void read_happiness_lexicon(std::string_view text, Lexicons& into);
void read_vad_lexicon(std::string_view text, Lexicons& into);
void read_polarity_lexicon(std::string_view text, Lexicons& into);
void read_emoticon_lexicon(std::string_view text, Lexicons& into);

}  // namespace campaign
