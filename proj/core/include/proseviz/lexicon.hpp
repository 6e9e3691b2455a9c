#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Bundled word tables: stopwords, background word frequencies, synonyms.
namespace proseviz {

bool is_stopword(std::string_view lowercase_word);

// Relative frequency of a lowercase word in general English text. Words absent
// from the bundled table receive kUnknownWordFrequency.
double background_frequency(std::string_view lowercase_word);
inline constexpr double kUnknownWordFrequency = 1e-6;

// Maps a lowercase word to replacement words that are strictly shorter.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;

  // Throws Error if any synonym is not shorter (in characters) than `word`.
  void add(std::string_view word, const std::vector<std::string>& synonyms);

  // Shortest synonym for a (case-insensitive) word, ties broken
  // lexicographically; nullopt when the word has no entry.
  [[nodiscard]] std::optional<std::string> shortest(std::string_view word) const;

  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const std::map<std::string, std::vector<std::string>>& entries() const {
    return entries_;
  }

  // Parses `word<TAB>syn1,syn2` lines; '#' starts a comment line.
  static SynonymLexicon from_tsv(std::string_view tsv);
  static const SynonymLexicon& bundled();

 private:
  std::map<std::string, std::vector<std::string>> entries_;
};

}  // namespace proseviz
