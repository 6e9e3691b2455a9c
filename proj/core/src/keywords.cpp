#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "proseviz/summarizer.hpp"
#include "proseviz/text_model.hpp"
#include "proseviz/utf8.hpp"

namespace proseviz {
namespace {

struct Candidate {
  std::string lower;
  CharSpan first;
  int tf = 0;
  double score = 0.0;
};

std::vector<Candidate> ranked_keywords(std::u32string_view text, int k) {
  if (k <= 0) return {};
  std::vector<Candidate> candidates;
  std::unordered_map<std::string, std::size_t> index;
  for (auto& tok : content_tokens(text)) {
    const auto [it, inserted] = index.try_emplace(tok.lower, candidates.size());
    if (inserted) candidates.push_back({std::move(tok.lower), tok.span, 0, 0.0});
    ++candidates[it->second].tf;
  }
  for (auto& c : candidates) c.score = c.tf * std::log(1.0 / background_frequency(c.lower));
  // candidates are in first-occurrence order, so a stable sort breaks ties by position
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.score > b.score; });
  if (candidates.size() > static_cast<std::size_t>(k)) candidates.resize(static_cast<std::size_t>(k));
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.first.begin < b.first.begin; });
  return candidates;
}

}  // namespace

std::vector<std::string> keyword_extract(std::string_view source, int k) {
  const std::u32string text = utf8::decode(source);
  std::vector<std::string> out;
  for (const auto& c : ranked_keywords(text, k)) {
    out.push_back(utf8::encode(std::u32string_view(text).substr(c.first.begin, c.first.size())));
  }
  return out;
}

SummaryResult keyword_summarize(std::string_view source, int k) {
  const std::u32string text = utf8::decode(source);
  SummaryResult result;
  result.mode_used = SummaryMode::Keywords;
  for (const auto& c : ranked_keywords(text, k)) {
    if (!result.text.empty()) result.text.push_back(' ');
    result.text += utf8::encode(std::u32string_view(text).substr(c.first.begin, c.first.size()));
    result.attended_spans.push_back(c.first);
  }
  result.word_count = word_count(result.text);
  return result;
}

}  // namespace proseviz
