#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "proseviz/layout.hpp"
#include "proseviz/summary_tree.hpp"
#include "proseviz/svg.hpp"
#include "proseviz/text_model.hpp"
#include "proseviz/textfit.hpp"

namespace proseviz {

// Baseline for line `index` of a block starting at `top`. The glyph box
// [baseline - 0.8 size, baseline + 0.2 size] is centred in the line box.
double line_baseline(double top, int index, const FontMetrics& font);

// Fill colour with adequate contrast: white iff luminance(background) <= 0.5.
Rgb contrast_text_color(const Rgb& background);

// ---------------------------------------------------------------------------
// Treemap

struct TreemapStyle {
  double width = 1200.0;
  double height = 800.0;
  std::string title;
  FontMetrics font = FontMetrics::sans(12.0);
  double padding = 2.0;
  Rgb neutral{0xbd, 0xbd, 0xbd};  // cells without a color value
};

// Plot area: the canvas below the title band.
Rect treemap_bounds(const TreemapStyle& style);
// Content rect minus the label line; where fitted text goes.
Rect treemap_text_area(const Cell& cell, const FontMetrics& font);

// One FitResult per cell, same order. Throws Error on a count mismatch or a
// cell whose item id is unknown.
SvgDoc render_treemap(std::span<const Item> items, std::span<const Cell> cells,
                      std::span<const FitResult> fits, const ColorScale& scale,
                      const TreemapStyle& style);

// ---------------------------------------------------------------------------
// Bar chart

struct BarchartStyle {
  double width = 1200.0;
  double height = 800.0;
  std::string title;
  FontMetrics font = FontMetrics::sans(12.0);
  double gap = 12.0;
  double padding = 4.0;
  bool overlay = false;  // text over the whole column instead of the space above the bar
  Rgb bar_fill{0x4e, 0x79, 0xa7};
};

Rect barchart_bounds(const BarchartStyle& style);
// Implied column (or whole column in overlay mode) inset by padding, less a
// line at the bottom reserved for the value label in non-overlay mode.
Rect barchart_text_area(const BarSlot& slot, const BarchartStyle& style);

// `scale` colours bars that carry a color value; others use style.bar_fill.
SvgDoc render_barchart(std::span<const Item> items, std::span<const BarSlot> slots,
                       std::span<const FitResult> fits, const std::optional<ColorScale>& scale,
                       const BarchartStyle& style);

// ---------------------------------------------------------------------------
// Span markup of running text

enum class MarkupChannel { Background, Weight, Italic, Color };

std::string_view to_string(MarkupChannel c);
MarkupChannel parse_markup_channel(std::string_view name);  // throws Error

struct MarkupSpan {
  CharSpan span;
  std::variant<double, std::string> value;  // score in [-1, 1] or a category
  MarkupChannel channel = MarkupChannel::Background;
};

struct MarkupStyle {
  double width = 900.0;
  FontMetrics font = FontMetrics::sans(14.0);
  double margin = 24.0;
  std::string title;
  // Summary shown in a right-hand column beside the marked-up source.
  std::optional<std::string> side_text;
};

// Later spans win per channel where they overlap. Throws Error for spans
// outside the text or scores outside [-1, 1].
SvgDoc render_markup(std::string_view text, std::span<const MarkupSpan> spans,
                     const ColorScale& scale, const MarkupStyle& style);

// ---------------------------------------------------------------------------
// Landmark prose

struct LandmarkStyle {
  double width = 900.0;
  FontMetrics font = FontMetrics::sans(14.0);
  double landmark_scale = 3.0;
  double opacity = 0.18;  // 0 drops the landmark layer
  double margin = 32.0;
  Rgb landmark_fill{0x1f, 0x4e, 0x79};
};

// Per passage, the passage summary in large faint type under the full prose.
SvgDoc render_landmark_prose(const Document& doc, const SummaryTree& tree,
                             const LandmarkStyle& style);

}  // namespace proseviz
