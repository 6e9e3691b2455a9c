#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proseviz/common.hpp"

namespace proseviz {

struct Heading {
  CharSpan span;
  int level = 1;  // 1 = chapter, 2 = section

  friend bool operator==(const Heading&, const Heading&) = default;
};

// A paragraph whose text matches `pattern` (ECMAScript regex, searched) is a
// heading of the given level. `max_words` > 0 additionally bounds its length.
struct HeadingRule {
  std::string pattern;
  int level = 1;
  int max_words = 0;
};

std::vector<HeadingRule> default_heading_rules();

struct Document {
  std::string id;
  std::string title;
  std::string body;  // UTF-8
  std::vector<Heading> headings;
  std::vector<CharSpan> paragraphs;
};

// Splits `body` into paragraphs at blank lines and tags headings. All spans
// are scalar-value offsets into `body`.
Document parse_document(std::string id, std::string title, std::string body,
                        const std::vector<HeadingRule>& rules = default_heading_rules());

// A run of paragraphs introduced by a level-1 heading. Text before the first
// level-1 heading forms a chapter titled after the document.
struct Chapter {
  std::string heading;
  std::optional<CharSpan> heading_span;
  CharSpan body;  // first content paragraph start .. last content paragraph end
  std::vector<std::size_t> paragraphs;
};

std::vector<Chapter> split_chapters(const Document& doc);

struct Sentence {
  CharSpan span;
  int word_count = 1;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Passage {
  std::size_t first_sentence = 0;
  std::size_t end_sentence = 0;  // exclusive
  int word_count = 0;
  CharSpan span;  // hull of member sentences

  [[nodiscard]] std::size_t sentence_count() const { return end_sentence - first_sentence; }
  friend bool operator==(const Passage&, const Passage&) = default;
};

struct ChunkConfig {
  int min_words = 50;
  int max_words = 120;

  // Throws Error unless 1 <= min_words <= max_words.
  void validate() const;
};

// Maximal whitespace-delimited runs that contain at least one letter or digit.
int word_count(std::string_view text);
int word_count(std::u32string_view text);

// Rule-based splitting at . ! ? outside a fixed abbreviation list. Spans are
// relative to `paragraph_text` and cover every non-whitespace character.
std::vector<Sentence> segment_sentences(std::string_view paragraph_text);
std::vector<Sentence> segment_sentences(std::u32string_view paragraph_text);

// Sentences of every content paragraph of `chapter`, in document coordinates.
std::vector<Sentence> segment_chapter(const Document& doc, const Chapter& chapter);

// Greedy accumulation into passages of [min_words, max_words] words. The last
// passage may be short; a sentence longer than max_words stands alone.
std::vector<Passage> chunk_passages(std::span<const Sentence> sentences, const ChunkConfig& cfg);

}  // namespace proseviz
