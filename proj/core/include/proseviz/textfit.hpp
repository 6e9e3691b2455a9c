#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "proseviz/layout.hpp"
#include "proseviz/lexicon.hpp"
#include "proseviz/summarizer.hpp"

namespace proseviz {

// Horizontal advances in units of font_size. Characters missing from the
// table advance by `fallback_advance`.
struct FontMetrics {
  double font_size = 12.0;
  double line_height = 15.0;
  std::shared_ptr<const std::unordered_map<char32_t, double>> advances;
  double fallback_advance = 0.5;
  double average_advance = 0.5;  // used for capacity estimates only
  double bold_scale = 1.08;      // bold runs are measured this much wider
  std::string family = "Helvetica, Arial, sans-serif";

  [[nodiscard]] double advance(char32_t c) const;
  // Throws Error unless size > 0, line_height >= font_size and advances > 0.
  void validate() const;

  // Helvetica/Arial-compatible widths; line height 1.25 × size.
  static FontMetrics sans(double font_size);
  // Every character advances by `advance` em.
  static FontMetrics uniform(double font_size, double advance = 0.5, double line_height = 0.0);
};

// Sum of per-character advances × font_size.
double measure(std::string_view text, const FontMetrics& font, bool bold = false);

struct Line {
  std::string text;
  double width = 0.0;
  bool oversize = false;  // a single word wider than the line

  friend bool operator==(const Line&, const Line&) = default;
};

// Greedy first-fit breaking at whitespace; no hyphenation.
std::vector<Line> wrap_greedy(std::string_view text, double line_width, const FontMetrics& font,
                              bool bold = false);

struct TextBudget {
  double line_width = 0.0;
  int max_lines = 0;
  int est_chars = 0;
  int est_words = 0;

  friend bool operator==(const TextBudget&, const TextBudget&) = default;
};

inline constexpr int kCharsPerWord = 6;

TextBudget budget_for_rect(const Rect& content, const FontMetrics& font);

enum class FitStrategy { Full, Summarized, SynonymShortened, Keywords, TruncatedLede, Empty };

std::string_view to_string(FitStrategy s);

struct FitResult {
  std::vector<std::string> lines;
  FitStrategy strategy = FitStrategy::Empty;
  int parameter = 0;  // summary target for Summarized, k for Keywords
  bool fits = false;  // false only for Empty

  [[nodiscard]] std::string label() const;  // e.g. "Keywords(3)"
  friend bool operator==(const FitResult&, const FitResult&) = default;
};

// True when `text` wraps into at most budget.max_lines lines, none oversize.
bool fits_budget(std::string_view text, const TextBudget& budget, const FontMetrics& font);

// Degradation ladder: full text, summaries at est_words then est_words / 2,
// synonym-shortened summary, keywords for k = est_words..1, truncated lede,
// and finally nothing. The first candidate that fits wins.
FitResult fit_ladder(std::string_view text, const TextBudget& budget, const FontMetrics& font,
                     const Summarizer& summarizer, const SynonymLexicon& lexicon);

}  // namespace proseviz
