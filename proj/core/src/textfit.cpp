#include "proseviz/textfit.hpp"

#include <cmath>
#include <optional>

#include "proseviz/utf8.hpp"

namespace proseviz {
namespace {

constexpr double kEps = 1e-9;

double scale_for(const FontMetrics& font, bool bold) {
  return font.font_size * (bold ? font.bold_scale : 1.0);
}

}  // namespace

void FontMetrics::validate() const {
  if (!(font_size > 0.0)) throw Error("font size must be positive");
  if (!(line_height >= font_size)) throw Error("line height must be at least the font size");
  if (!(fallback_advance > 0.0 && average_advance > 0.0 && bold_scale > 0.0)) {
    throw Error("font advances must be positive");
  }
  if (advances) {
    for (const auto& [c, a] : *advances) {
      if (!(a > 0.0)) throw Error("font advances must be positive");
    }
  }
}

double measure(std::string_view text, const FontMetrics& font, bool bold) {
  const double scale = scale_for(font, bold);
  double width = 0.0;
  for (char32_t c : utf8::decode(text)) width += font.advance(c) * scale;
  return width;
}

std::vector<Line> wrap_greedy(std::string_view text, double line_width, const FontMetrics& font,
                              bool bold) {
  if (!(line_width > 0.0)) throw Error("line width must be positive");
  const double scale = scale_for(font, bold);
  const std::u32string cps = utf8::decode(text);
  std::vector<Line> lines;
  std::u32string line;
  double width = 0.0;
  const auto flush = [&] {
    if (line.empty()) return;
    lines.push_back({utf8::encode(line), width, width > line_width + kEps});
    line.clear();
    width = 0.0;
  };

  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && utf8::is_space(cps[i])) ++i;
    const std::size_t begin = i;
    while (i < cps.size() && !utf8::is_space(cps[i])) ++i;
    if (begin == i) break;
    const std::u32string_view word(cps.data() + begin, i - begin);

    if (!line.empty()) {
      // Accumulate in the same order measure() would, so widths agree exactly.
      double candidate = width + font.advance(U' ') * scale;
      for (char32_t c : word) candidate += font.advance(c) * scale;
      if (candidate <= line_width + kEps) {
        line.push_back(U' ');
        line.append(word);
        width = candidate;
        continue;
      }
      flush();
    }
    line.assign(word);
    for (char32_t c : word) width += font.advance(c) * scale;
  }
  flush();
  return lines;
}

TextBudget budget_for_rect(const Rect& content, const FontMetrics& font) {
  font.validate();
  TextBudget b;
  b.line_width = std::max(0.0, content.w);
  if (content.h > 0.0) b.max_lines = static_cast<int>(std::floor(content.h / font.line_height + kEps));
  const double per_char = font.average_advance * font.font_size;
  const int chars_per_line = static_cast<int>(std::floor(b.line_width / per_char + kEps));
  b.est_chars = b.max_lines * chars_per_line;
  b.est_words = b.est_chars / kCharsPerWord;
  return b;
}

std::string_view to_string(FitStrategy s) {
  switch (s) {
    case FitStrategy::Full: return "Full";
    case FitStrategy::Summarized: return "Summarized";
    case FitStrategy::SynonymShortened: return "SynonymShortened";
    case FitStrategy::Keywords: return "Keywords";
    case FitStrategy::TruncatedLede: return "TruncatedLede";
    case FitStrategy::Empty: return "Empty";
  }
  return "Empty";
}

std::string FitResult::label() const {
  std::string out(to_string(strategy));
  if (strategy == FitStrategy::Summarized || strategy == FitStrategy::Keywords) {
    out += "(" + std::to_string(parameter) + ")";
  }
  return out;
}

bool fits_budget(std::string_view text, const TextBudget& budget, const FontMetrics& font) {
  if (budget.max_lines <= 0 || !(budget.line_width > 0.0)) return false;
  const auto lines = wrap_greedy(text, budget.line_width, font);
  if (lines.empty() || lines.size() > static_cast<std::size_t>(budget.max_lines)) return false;
  for (const auto& l : lines) {
    if (l.oversize) return false;
  }
  return true;
}

FitResult fit_ladder(std::string_view text, const TextBudget& budget, const FontMetrics& font,
                     const Summarizer& summarizer, const SynonymLexicon& lexicon) {
  font.validate();
  const auto accept = [&](std::string_view candidate, FitStrategy strategy,
                          int parameter) -> std::optional<FitResult> {
    if (candidate.empty() || !fits_budget(candidate, budget, font)) return std::nullopt;
    FitResult r;
    for (auto& l : wrap_greedy(candidate, budget.line_width, font)) r.lines.push_back(std::move(l.text));
    r.strategy = strategy;
    r.parameter = parameter;
    r.fits = true;
    return r;
  };

  if (budget.max_lines <= 0 || !(budget.line_width > 0.0)) return {};

  if (auto r = accept(text, FitStrategy::Full, 0)) return *r;

  std::string best_summary;
  for (int target : {budget.est_words, budget.est_words / 2}) {
    if (target <= 0) continue;
    const SummaryResult s = summarizer.summarize(text, target);
    if (best_summary.empty()) best_summary = s.text;
    if (auto r = accept(s.text, FitStrategy::Summarized, target)) return *r;
  }

  const std::string base = best_summary.empty() ? std::string(text) : best_summary;
  const std::string shortened = synonym_shorten(base, lexicon);
  if (shortened != base) {
    if (auto r = accept(shortened, FitStrategy::SynonymShortened, 0)) return *r;
  }

  for (int k = budget.est_words; k >= 1; --k) {
    if (auto r = accept(keyword_summarize(text, k).text, FitStrategy::Keywords, k)) return *r;
  }

  int chars = budget.est_chars;
  while (chars > 0) {
    const SummaryResult lede = lede_extract(text, chars);
    if (lede.text.empty()) break;
    if (auto r = accept(lede.text, FitStrategy::TruncatedLede, chars)) return *r;
    chars = std::min(chars - 1, static_cast<int>(utf8::length(lede.text)) - 1);
  }

  return {};
}

}  // namespace proseviz
