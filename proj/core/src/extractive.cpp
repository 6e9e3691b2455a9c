#include <algorithm>
#include <iostream>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "proseviz/log.hpp"
#include "proseviz/summarizer.hpp"
#include "proseviz/text_model.hpp"
#include "proseviz/utf8.hpp"
#include "source_sentences.hpp"

namespace proseviz {
namespace {

std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}

std::function<void(std::string_view)>& log_sink() {
  static std::function<void(std::string_view)> sink = [](std::string_view msg) {
    std::cerr << "proseviz: " << msg << '\n';
  };
  return sink;
}

constexpr char32_t kEllipsis = 0x2026;

bool is_trailing_joiner(char32_t c) {
  return c == U',' || c == U';' || c == U':' || c == U'-' || c == 0x2013 || c == 0x2014;
}

// End offsets (exclusive) of the word-bearing whitespace runs in `span`.
std::vector<std::size_t> word_ends(std::u32string_view text, CharSpan span) {
  std::vector<std::size_t> ends;
  std::size_t i = span.begin;
  while (i < span.end) {
    while (i < span.end && utf8::is_space(text[i])) ++i;
    bool alnum = false;
    for (; i < span.end && !utf8::is_space(text[i]); ++i) alnum = alnum || utf8::is_alnum(text[i]);
    if (alnum) ends.push_back(i);
  }
  return ends;
}

std::string text_of(std::u32string_view text, CharSpan span) {
  return utf8::encode(text.substr(span.begin, span.size()));
}

}  // namespace

void set_log_sink(std::function<void(std::string_view)> sink) {
  std::lock_guard lock(log_mutex());
  log_sink() = std::move(sink);
}

void log_warning(std::string_view message) {
  std::lock_guard lock(log_mutex());
  if (log_sink()) log_sink()(message);
}

std::string_view to_string(SummaryMode mode) {
  switch (mode) {
    case SummaryMode::Extractive: return "extractive";
    case SummaryMode::Lede: return "lede";
    case SummaryMode::Keywords: return "keywords";
    case SummaryMode::Remote: return "remote";
  }
  return "extractive";
}

SummaryMode parse_summary_mode(std::string_view name) {
  for (SummaryMode m : {SummaryMode::Extractive, SummaryMode::Lede, SummaryMode::Keywords,
                        SummaryMode::Remote}) {
    if (to_string(m) == name) return m;
  }
  throw Error("unknown summarizer mode '" + std::string(name) + "'");
}

std::vector<Token> content_tokens(std::u32string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!utf8::is_alnum(text[i])) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    bool letter = false;
    std::u32string lower;
    while (i < text.size() && utf8::is_alnum(text[i])) {
      letter = letter || utf8::is_alpha(text[i]);
      lower.push_back(utf8::to_lower(text[i++]));
    }
    if (!letter || lower.size() < 2) continue;
    std::string word = utf8::encode(lower);
    if (is_stopword(word)) continue;
    out.push_back({std::move(word), {begin, i}});
  }
  return out;
}

SummaryResult extractive_summarize(std::string_view source, int target_words,
                                   const ExtractiveOptions& options) {
  SummaryResult result;
  result.mode_used = SummaryMode::Extractive;
  if (target_words <= 0 || options.max_sentences == 0) return result;

  const std::u32string text = utf8::decode(source);
  const std::vector<Sentence> sentences = detail::source_sentences(text);
  if (sentences.empty()) return result;

  std::unordered_map<std::string, int> tf;
  std::vector<std::vector<std::string>> sentence_words(sentences.size());
  int max_tf = 0;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const CharSpan span = sentences[s].span;
    for (auto& tok : content_tokens(std::u32string_view(text).substr(span.begin, span.size()))) {
      max_tf = std::max(max_tf, ++tf[tok.lower]);
      sentence_words[s].push_back(std::move(tok.lower));
    }
  }
  std::vector<double> score(sentences.size(), 0.0);
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    double sum = 0.0;
    for (const auto& w : sentence_words[s]) sum += static_cast<double>(tf[w]) / max_tf;
    score[s] = sum / sentences[s].word_count;
  }

  std::vector<std::size_t> order(sentences.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });

  std::vector<std::size_t> chosen;
  int total = 0;
  for (std::size_t idx : order) {
    if (chosen.size() >= options.max_sentences) break;
    if (total + sentences[idx].word_count <= target_words) {
      chosen.push_back(idx);
      total += sentences[idx].word_count;
    }
  }

  if (chosen.empty()) {
    if (!options.truncate_when_nothing_fits) return result;
    const CharSpan top = sentences[order.front()].span;
    const auto ends = word_ends(text, top);
    const std::size_t keep = std::min<std::size_t>(ends.size(), static_cast<std::size_t>(target_words));
    std::size_t end = ends[keep - 1];
    while (end > top.begin && is_trailing_joiner(text[end - 1])) --end;
    const CharSpan kept{top.begin, end};
    result.text = text_of(text, kept);
    utf8::append(result.text, kEllipsis);
    result.word_count = word_count(result.text);
    result.attended_spans.push_back(kept);
    return result;
  }

  std::sort(chosen.begin(), chosen.end());
  for (std::size_t idx : chosen) {
    if (!result.text.empty()) result.text.push_back(' ');
    result.text += text_of(text, sentences[idx].span);
    result.attended_spans.push_back(sentences[idx].span);
  }
  result.word_count = total;
  return result;
}

SummaryResult lede_extract(std::string_view source, int max_chars) {
  SummaryResult result;
  result.mode_used = SummaryMode::Lede;
  if (max_chars <= 0) return result;

  const std::u32string text = utf8::decode(source);
  const std::vector<Sentence> sentences = detail::source_sentences(text);
  if (sentences.empty()) return result;
  const CharSpan first = sentences.front().span;

  CharSpan kept{first.begin, first.begin};
  bool truncated = false;
  if (first.size() <= static_cast<std::size_t>(max_chars)) {
    kept = first;
  } else {
    for (std::size_t end : word_ends(text, first)) {
      while (end > first.begin && is_trailing_joiner(text[end - 1])) --end;
      if (end - first.begin + 1 > static_cast<std::size_t>(max_chars)) break;
      kept.end = end;
    }
    truncated = true;
  }
  if (kept.empty()) return result;

  result.text = text_of(text, kept);
  if (truncated) utf8::append(result.text, kEllipsis);
  result.word_count = word_count(result.text);
  result.attended_spans.push_back(kept);
  return result;
}

std::string synonym_shorten(std::string_view text, const SynonymLexicon& lexicon) {
  const std::u32string in = utf8::decode(text);
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < in.size()) {
    if (!utf8::is_alnum(in[i])) {
      utf8::append(out, in[i++]);
      continue;
    }
    const std::size_t begin = i;
    while (i < in.size() && utf8::is_alnum(in[i])) ++i;
    const std::u32string_view word(in.data() + begin, i - begin);
    const auto replacement = lexicon.shortest(utf8::encode(word));
    if (!replacement) {
      out += utf8::encode(word);
      continue;
    }
    std::u32string syn = utf8::decode(*replacement);
    if (utf8::is_upper(word.front()) && !syn.empty()) syn.front() = utf8::to_upper(syn.front());
    out += utf8::encode(syn);
  }
  return out;
}

SummaryResult ExtractiveSummarizer::summarize(std::string_view source, int target_words) const {
  return extractive_summarize(source, target_words, options_);
}

SummaryResult LedeSummarizer::summarize(std::string_view source, int target_words) const {
  return lede_extract(source, target_words * 6);
}

SummaryResult KeywordSummarizer::summarize(std::string_view source, int target_words) const {
  return keyword_summarize(source, target_words);
}

std::unique_ptr<Summarizer> make_summarizer(SummaryMode mode, const ProviderConfig& provider) {
  switch (mode) {
    case SummaryMode::Lede: return std::make_unique<LedeSummarizer>();
    case SummaryMode::Keywords: return std::make_unique<KeywordSummarizer>();
    case SummaryMode::Remote:
      return std::make_unique<RemoteSummarizer>(provider, http_transport(provider.timeout));
    case SummaryMode::Extractive: break;
  }
  return std::make_unique<ExtractiveSummarizer>();
}

}  // namespace proseviz
