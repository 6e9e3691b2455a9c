#include "proseviz/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "proseviz/common.hpp"
#include "proseviz/utf8.hpp"

namespace proseviz {
namespace data {
extern const std::string_view kStopwords;
extern const std::string_view kBackgroundFrequencies;
extern const std::string_view kSynonyms;
}  // namespace data

namespace {

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

const std::unordered_set<std::string>& stopword_set() {
  static const auto* set = [] {
    auto* s = new std::unordered_set<std::string>();
    for_each_line(data::kStopwords, [&](std::string_view line) {
      line = strip(line);
      if (!line.empty()) s->emplace(line);
    });
    return s;
  }();
  return *set;
}

const std::unordered_map<std::string, double>& frequency_table() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string, double>();
    for_each_line(data::kBackgroundFrequencies, [&](std::string_view line) {
      const std::size_t tab = line.find('\t');
      if (tab == std::string_view::npos) return;
      const std::string_view value = line.substr(tab + 1);
      double f = 0.0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), f);
      if (ec == std::errc() && f > 0.0) t->emplace(line.substr(0, tab), f);
    });
    return t;
  }();
  return *table;
}

}  // namespace

bool is_stopword(std::string_view lowercase_word) {
  return stopword_set().contains(std::string(lowercase_word));
}

double background_frequency(std::string_view lowercase_word) {
  const auto& table = frequency_table();
  const auto it = table.find(std::string(lowercase_word));
  return it == table.end() ? kUnknownWordFrequency : it->second;
}

void SynonymLexicon::add(std::string_view word, const std::vector<std::string>& synonyms) {
  const std::string key = utf8::to_lower(word);
  const std::size_t key_len = utf8::length(key);
  auto& slot = entries_[key];
  for (const auto& syn : synonyms) {
    if (utf8::length(syn) >= key_len) {
      throw Error("synonym '" + syn + "' is not shorter than '" + key + "'");
    }
    if (std::find(slot.begin(), slot.end(), syn) == slot.end()) slot.push_back(syn);
  }
  if (slot.empty()) entries_.erase(key);
}

std::optional<std::string> SynonymLexicon::shortest(std::string_view word) const {
  const auto it = entries_.find(utf8::to_lower(word));
  if (it == entries_.end()) return std::nullopt;
  const auto best = std::min_element(
      it->second.begin(), it->second.end(), [](const std::string& a, const std::string& b) {
        const std::size_t la = utf8::length(a);
        const std::size_t lb = utf8::length(b);
        return la != lb ? la < lb : a < b;
      });
  return *best;
}

SynonymLexicon SynonymLexicon::from_tsv(std::string_view tsv) {
  SynonymLexicon lex;
  for_each_line(tsv, [&](std::string_view line) {
    line = strip(line);
    if (line.empty() || line.front() == '#') return;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) throw Error("synonym line without tab: " + std::string(line));
    std::vector<std::string> syns;
    std::string_view rest = line.substr(tab + 1);
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view item = strip(rest.substr(0, comma));
      if (!item.empty()) syns.emplace_back(item);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    lex.add(strip(line.substr(0, tab)), syns);
  });
  return lex;
}

const SynonymLexicon& SynonymLexicon::bundled() {
  static const SynonymLexicon lex = from_tsv(data::kSynonyms);
  return lex;
}

}  // namespace proseviz
