#include "proseviz/text_model.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <regex>

#include "proseviz/utf8.hpp"
#include "source_sentences.hpp"

namespace proseviz {
namespace {

constexpr std::array<std::u32string_view, 22> kAbbreviations = {
    U"mr.",  U"mrs.", U"ms.",  U"dr.",  U"st.",   U"jr.",  U"sr.", U"prof.",
    U"etc.", U"e.g.", U"i.e.", U"vs.",  U"no.",   U"mt.",  U"gen.", U"col.",
    U"lt.",  U"capt.", U"rev.", U"fig.", U"vol.", U"approx."};

bool is_terminal(char32_t c) { return c == U'.' || c == U'!' || c == U'?' || c == 0x2026; }

bool is_closer(char32_t c) {
  switch (c) {
    case U'\'': case U'"': case U')': case U']': case U'}':
    case 0x2019: case 0x201D: case 0xBB:
      return true;
    default:
      return false;
  }
}

bool is_opener(char32_t c) {
  switch (c) {
    case U'\'': case U'"': case U'(': case U'[': case U'{':
    case 0x2018: case 0x201C: case 0xAB:
      return true;
    default:
      return false;
  }
}

// True when the period at `dot` ends a token from the abbreviation list.
bool ends_abbreviation(std::u32string_view text, std::size_t dot) {
  std::size_t start = dot;
  while (start > 0 && !utf8::is_space(text[start - 1])) --start;
  while (start < dot && is_opener(text[start])) ++start;
  std::u32string token;
  for (std::size_t k = start; k <= dot; ++k) token.push_back(utf8::to_lower(text[k]));
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), token) != kAbbreviations.end();
}

// First letter/digit at or after `k`, skipping opening punctuation.
bool next_starts_lowercase(std::u32string_view text, std::size_t k) {
  while (k < text.size() && is_opener(text[k])) ++k;
  return k < text.size() && utf8::is_lower(text[k]);
}

CharSpan trim(std::u32string_view text, CharSpan span) {
  while (span.begin < span.end && utf8::is_space(text[span.begin])) ++span.begin;
  while (span.end > span.begin && utf8::is_space(text[span.end - 1])) --span.end;
  return span;
}

std::vector<CharSpan> paragraph_spans(std::u32string_view text) {
  std::vector<CharSpan> out;
  std::size_t line_start = 0;
  std::optional<CharSpan> current;
  const auto flush = [&] {
    if (current) out.push_back(trim(text, *current));
    current.reset();
  };
  while (line_start <= text.size()) {
    std::size_t line_end = line_start;
    while (line_end < text.size() && text[line_end] != U'\n') ++line_end;
    bool blank = true;
    for (std::size_t k = line_start; k < line_end && blank; ++k) blank = utf8::is_space(text[k]);
    if (blank) {
      flush();
    } else if (current) {
      current->end = line_end;
    } else {
      current = CharSpan{line_start, line_end};
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  flush();
  return out;
}

}  // namespace

std::vector<HeadingRule> default_heading_rules() {
  return {
      {R"(^CHAPTER [IVXLCDM]+\.)", 1, 0},
      {R"(^# )", 1, 0},
      {R"(^## )", 2, 0},
      {R"(^[^a-z]*[A-Z][^a-z]*$)", 2, 7},
  };
}

void ChunkConfig::validate() const {
  if (min_words < 1 || min_words > max_words) {
    throw Error("chunk config requires 1 <= min_words <= max_words");
  }
}

int word_count(std::u32string_view text) {
  int count = 0;
  bool in_run = false;
  bool has_alnum = false;
  for (char32_t c : text) {
    if (utf8::is_space(c)) {
      if (in_run && has_alnum) ++count;
      in_run = has_alnum = false;
    } else {
      in_run = true;
      has_alnum = has_alnum || utf8::is_alnum(c);
    }
  }
  if (in_run && has_alnum) ++count;
  return count;
}

int word_count(std::string_view text) { return word_count(utf8::decode(text)); }

std::vector<Sentence> segment_sentences(std::u32string_view text) {
  std::vector<CharSpan> pieces;
  const std::size_t n = text.size();
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (!is_terminal(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    bool only_periods = text[i] == U'.';
    while (j < n && (is_terminal(text[j]) || is_closer(text[j]))) {
      only_periods = only_periods && (text[j] == U'.' || is_closer(text[j]));
      ++j;
    }
    if (j < n && !utf8::is_space(text[j])) {
      i = j;
      continue;
    }
    std::size_t k = j;
    while (k < n && utf8::is_space(text[k])) ++k;
    const bool boundary =
        k == n || !(next_starts_lowercase(text, k) || (only_periods && text[i] == U'.' &&
                                                        ends_abbreviation(text, i)));
    if (boundary) {
      pieces.push_back(trim(text, {start, j}));
      start = k;
    }
    i = k;
  }
  if (start < n) {
    const CharSpan tail = trim(text, {start, n});
    if (!tail.empty()) pieces.push_back(tail);
  }

  std::vector<Sentence> out;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t pending_begin = kNone;
  for (const CharSpan& piece : pieces) {
    if (piece.empty()) continue;
    const int words = word_count(text.substr(piece.begin, piece.size()));
    if (words == 0) {
      // Punctuation-only fragments join a neighbour so every sentence has a word.
      if (!out.empty()) {
        out.back().span.end = piece.end;
      } else if (pending_begin == kNone) {
        pending_begin = piece.begin;
      }
      continue;
    }
    Sentence s{piece, words};
    if (pending_begin != kNone) {
      s.span.begin = pending_begin;
      pending_begin = kNone;
    }
    out.push_back(s);
  }
  if (out.empty() && pending_begin != kNone) {
    // No words at all: still cover the non-whitespace text with one span.
    // word_count stays at its minimum of 1 per the Sentence contract.
    out.push_back({{pending_begin, pieces.back().end}, 1});
  }
  return out;
}

std::vector<Sentence> segment_sentences(std::string_view paragraph_text) {
  return segment_sentences(utf8::decode(paragraph_text));
}

Document parse_document(std::string id, std::string title, std::string body,
                        const std::vector<HeadingRule>& rules) {
  Document doc{std::move(id), std::move(title), std::move(body), {}, {}};
  const std::u32string text = utf8::decode(doc.body);

  doc.paragraphs = paragraph_spans(text);

  std::vector<std::pair<std::regex, const HeadingRule*>> compiled;
  compiled.reserve(rules.size());
  for (const auto& rule : rules) {
    try {
      compiled.emplace_back(std::regex(rule.pattern), &rule);
    } catch (const std::regex_error& e) {
      throw Error("invalid heading pattern '" + rule.pattern + "': " + e.what());
    }
  }
  for (const CharSpan& para : doc.paragraphs) {
    const std::u32string_view para_text(text.data() + para.begin, para.size());
    const std::string utf8_text = utf8::encode(para_text);
    for (const auto& [re, rule] : compiled) {
      if (rule->max_words > 0 && word_count(para_text) > rule->max_words) continue;
      if (std::regex_search(utf8_text, re)) {
        doc.headings.push_back({para, rule->level});
        break;
      }
    }
  }
  return doc;
}

std::vector<Chapter> split_chapters(const Document& doc) {
  std::vector<Chapter> chapters;
  const auto heading_at = [&](const CharSpan& para) -> const Heading* {
    for (const auto& h : doc.headings) {
      if (h.span == para) return &h;
    }
    return nullptr;
  };
  const auto close = [](Chapter& ch, const std::vector<CharSpan>& paras) {
    if (!ch.paragraphs.empty()) {
      ch.body = {paras[ch.paragraphs.front()].begin, paras[ch.paragraphs.back()].end};
    } else if (ch.heading_span) {
      ch.body = {ch.heading_span->end, ch.heading_span->end};
    }
  };

  std::optional<Chapter> current;
  for (std::size_t p = 0; p < doc.paragraphs.size(); ++p) {
    const Heading* h = heading_at(doc.paragraphs[p]);
    if (h != nullptr && h->level == 1) {
      if (current) {
        close(*current, doc.paragraphs);
        chapters.push_back(std::move(*current));
      }
      current = Chapter{utf8::slice(doc.body, h->span), h->span, {}, {}};
      continue;
    }
    if (!current) current = Chapter{doc.title, std::nullopt, {}, {}};
    current->paragraphs.push_back(p);
  }
  if (current) {
    close(*current, doc.paragraphs);
    chapters.push_back(std::move(*current));
  }
  return chapters;
}

std::vector<Sentence> segment_chapter(const Document& doc, const Chapter& chapter) {
  const std::u32string text = utf8::decode(doc.body);
  std::vector<Sentence> out;
  for (std::size_t p : chapter.paragraphs) {
    const CharSpan para = doc.paragraphs.at(p);
    for (Sentence s : segment_sentences(std::u32string_view(text).substr(para.begin, para.size()))) {
      s.span = s.span.shifted(para.begin);
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Passage> chunk_passages(std::span<const Sentence> sentences, const ChunkConfig& cfg) {
  cfg.validate();
  std::vector<Passage> out;
  std::optional<Passage> cur;
  const auto close = [&] {
    if (cur) {
      cur->span = {sentences[cur->first_sentence].span.begin,
                   sentences[cur->end_sentence - 1].span.end};
      out.push_back(*cur);
      cur.reset();
    }
  };
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const int words = sentences[i].word_count;
    if (words > cfg.max_words) {
      close();
      cur = Passage{i, i + 1, words, {}};
      close();
      continue;
    }
    if (cur && cur->word_count + words > cfg.max_words && cur->word_count >= cfg.min_words) {
      close();
    }
    if (!cur) cur = Passage{i, i, 0, {}};
    cur->end_sentence = i + 1;
    cur->word_count += words;
  }
  close();
  return out;
}

namespace detail {

std::vector<Sentence> source_sentences(std::u32string_view text) {
  std::vector<Sentence> out;
  for (const CharSpan& para : paragraph_spans(text)) {
    for (Sentence s : segment_sentences(text.substr(para.begin, para.size()))) {
      s.span = s.span.shifted(para.begin);
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace detail
}  // namespace proseviz
