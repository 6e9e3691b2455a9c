#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "proseviz/summarizer.hpp"
#include "proseviz/text_model.hpp"

namespace proseviz {

enum class NodeLevel { Chapter, Passage };

struct SummaryNode {
  std::string id;
  NodeLevel level = NodeLevel::Passage;
  std::string heading;  // chapter nodes only
  SummaryResult summary;
  // Document span. Leaf spans run from a passage's first sentence to the next
  // passage's first sentence (the last one to the chapter end), so leaves tile
  // the chapter body exactly.
  CharSpan span;
  std::vector<std::size_t> children;
};

// Nodes in document pre-order: each chapter node precedes its leaves.
struct SummaryTree {
  std::vector<SummaryNode> nodes;
  std::vector<std::size_t> chapters;
};

struct TreeConfig {
  ChunkConfig chunk;
  int leaf_target_words = 15;
  int chapter_target_words = 25;
};

// Segments and chunks every chapter, summarizes each passage into one
// sentence, then summarizes the concatenated passage summaries per chapter.
// Passage summaries run concurrently up to summarizer.max_concurrency() and are
// reassembled in document order.
SummaryTree build_summary_tree(const Document& doc, const TreeConfig& cfg,
                               const Summarizer& summarizer);

}  // namespace proseviz
