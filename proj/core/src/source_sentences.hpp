#pragma once

#include <string_view>
#include <vector>

#include "proseviz/text_model.hpp"

namespace proseviz::detail {

// Sentences of free text: paragraphs split at blank lines, each segmented.
std::vector<Sentence> source_sentences(std::u32string_view text);

}  // namespace proseviz::detail
