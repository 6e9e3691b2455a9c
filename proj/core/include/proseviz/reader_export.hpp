#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proseviz/summary_tree.hpp"
#include "proseviz/text_model.hpp"

namespace proseviz {

inline constexpr int kReaderFormatVersion = 1;

struct ReaderNode {
  std::string id;
  // Offsets into the chapter body. Consecutive nodes share endpoints and the
  // first starts at 0, so the spans tile the chapter.
  CharSpan span;
  std::string summary;
  std::string full_text;
  int word_count = 0;

  friend bool operator==(const ReaderNode&, const ReaderNode&) = default;
};

struct ReaderChapter {
  std::string id;
  std::string heading;
  std::string summary;  // may be empty
  std::vector<ReaderNode> nodes;

  friend bool operator==(const ReaderChapter&, const ReaderChapter&) = default;
};

struct ReaderDoc {
  int version = kReaderFormatVersion;
  std::string title;
  std::vector<ReaderChapter> chapters;

  friend bool operator==(const ReaderDoc&, const ReaderDoc&) = default;
};

// One node per leaf with full_text = the leaf's exact text. Throws Error
// "span coverage violation" unless each chapter's leaves tile its body.
ReaderDoc export_reader(const Document& doc, const SummaryTree& tree);

// Pretty-printed JSON, fixed key order, trailing newline.
std::string serialize_reader(const ReaderDoc& doc);

struct ReaderValidation {
  std::optional<ReaderDoc> doc;     // set iff errors is empty
  std::vector<std::string> errors;  // "path: message", in document order

  [[nodiscard]] bool ok() const { return errors.empty(); }
};

ReaderValidation validate_reader(std::string_view bytes);

// validate_reader, throwing Error with every message joined on failure.
ReaderDoc parse_reader(std::string_view bytes);

}  // namespace proseviz
