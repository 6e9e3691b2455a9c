#include "proseviz/summary_tree.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "proseviz/utf8.hpp"

namespace proseviz {
namespace {

SummaryResult summarize_one_sentence(const Summarizer& summarizer, std::string_view text,
                                     int target) {
  SummaryResult r = summarizer.summarize(text, target);
  if (r.text.empty() && target > 0) {
    r = extractive_summarize(text, target, {.max_sentences = 1, .truncate_when_nothing_fits = true});
  }
  return r;
}

struct LeafJob {
  std::size_t node = 0;
  CharSpan source;
};

}  // namespace

SummaryTree build_summary_tree(const Document& doc, const TreeConfig& cfg,
                               const Summarizer& summarizer) {
  cfg.chunk.validate();
  const std::u32string body = utf8::decode(doc.body);
  const auto text_of = [&](CharSpan s) {
    return utf8::encode(std::u32string_view(body).substr(s.begin, s.size()));
  };

  SummaryTree tree;
  std::vector<LeafJob> jobs;
  const auto chapters = split_chapters(doc);
  for (std::size_t c = 0; c < chapters.size(); ++c) {
    const Chapter& chapter = chapters[c];
    const std::size_t chapter_node = tree.nodes.size();
    tree.chapters.push_back(chapter_node);
    tree.nodes.push_back({"ch" + std::to_string(c + 1), NodeLevel::Chapter, chapter.heading, {},
                          chapter.body, {}});

    const auto sentences = segment_chapter(doc, chapter);
    const auto passages = chunk_passages(sentences, cfg.chunk);
    for (std::size_t p = 0; p < passages.size(); ++p) {
      const CharSpan span{p == 0 ? chapter.body.begin : passages[p].span.begin,
                          p + 1 < passages.size() ? passages[p + 1].span.begin : chapter.body.end};
      const std::size_t leaf = tree.nodes.size();
      tree.nodes[chapter_node].children.push_back(leaf);
      tree.nodes.push_back({"ch" + std::to_string(c + 1) + ".p" + std::to_string(p + 1),
                            NodeLevel::Passage, {}, {}, span, {}});
      jobs.push_back({leaf, passages[p].span});
    }
  }

  const std::size_t workers =
      std::clamp<std::size_t>(summarizer.max_concurrency(), 1, std::max<std::size_t>(1, jobs.size()));
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      SummaryResult r = summarize_one_sentence(summarizer, text_of(jobs[j].source), cfg.leaf_target_words);
      for (auto& s : r.attended_spans) s = s.shifted(jobs[j].source.begin);
      tree.nodes[jobs[j].node].summary = std::move(r);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (std::size_t chapter_node : tree.chapters) {
    SummaryNode& node = tree.nodes[chapter_node];
    std::string joined;
    for (std::size_t leaf : node.children) {
      if (!joined.empty()) joined.push_back(' ');
      joined += tree.nodes[leaf].summary.text;
    }
    node.summary = summarize_one_sentence(summarizer, joined, cfg.chapter_target_words);
    // Spans would index the synthetic concatenation, not the document.
    node.summary.attended_spans.clear();
  }
  return tree;
}

}  // namespace proseviz
