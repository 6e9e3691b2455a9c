#include "proseviz/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "proseviz/utf8.hpp"

namespace proseviz {
namespace {

constexpr std::string_view kEllipsis = "…";

SvgElement text_element(std::string content, double x, double baseline, double font_size,
                        const std::string& fill, bool bold = false, bool italic = false,
                        std::string_view cls = {}) {
  SvgElement e("text");
  if (!cls.empty()) e.attr("class", std::string(cls));
  e.attr("x", x).attr("y", baseline).attr("font-size", font_size);
  if (bold) e.attr("font-weight", "bold");
  if (italic) e.attr("font-style", "italic");
  e.attr("fill", fill);
  e.text(std::move(content));
  return e;
}

SvgElement rect_element(const Rect& r, const std::string& fill) {
  SvgElement e("rect");
  e.attr("x", r.x).attr("y", r.y).attr("width", r.w).attr("height", r.h).attr("fill", fill);
  return e;
}

FontMetrics scaled(const FontMetrics& font, double factor) {
  FontMetrics f = font;
  f.font_size *= factor;
  f.line_height *= factor;
  return f;
}

// `text` if it fits on one line of `width`, else its longest prefix plus an
// ellipsis that does; empty when not even the ellipsis fits.
std::string fit_single_line(std::string_view text, double width, const FontMetrics& font, bool bold) {
  if (measure(text, font, bold) <= width + 1e-9) return std::string(text);
  std::u32string cps = utf8::decode(text);
  while (!cps.empty()) {
    cps.pop_back();
    while (!cps.empty() && utf8::is_space(cps.back())) cps.pop_back();
    std::string candidate = utf8::encode(cps) + std::string(kEllipsis);
    if (measure(candidate, font, bold) <= width + 1e-9) return candidate;
  }
  return {};
}

const Item& find_item(std::span<const Item> items, const std::string& id) {
  for (const auto& it : items) {
    if (it.id == id) return it;
  }
  throw Error("no item with id '" + id + "'");
}

std::string id_attr(std::string_view prefix, std::string_view id) {
  std::string out(prefix);
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_';
    out.push_back(ok ? c : '_');
  }
  return out;
}

double title_band(const std::string& title, const FontMetrics& font) {
  return title.empty() ? 0.0 : 2.0 * font.line_height;
}

void add_title(SvgDoc& doc, const std::string& title, const FontMetrics& font, double x) {
  if (title.empty()) return;
  const FontMetrics big = scaled(font, 1.5);
  doc.body.push_back(text_element(title, x, line_baseline(0.0, 0, big) + 0.25 * font.line_height,
                                  big.font_size, "#222222", true, false, "title"));
}

}  // namespace

double line_baseline(double top, int index, const FontMetrics& font) {
  return top + index * font.line_height + (font.line_height - font.font_size) / 2.0 +
         0.8 * font.font_size;
}

Rgb contrast_text_color(const Rgb& background) {
  return luminance(background) > 0.5 ? Rgb{0, 0, 0} : Rgb{255, 255, 255};
}

// ---------------------------------------------------------------------------

Rect treemap_bounds(const TreemapStyle& style) {
  const double band = title_band(style.title, style.font);
  return {0.0, band, style.width, std::max(0.0, style.height - band)};
}

Rect treemap_text_area(const Cell& cell, const FontMetrics& font) {
  const Rect& c = cell.content;
  return {c.x, c.y + font.line_height, c.w, std::max(0.0, c.h - font.line_height)};
}

SvgDoc render_treemap(std::span<const Item> items, std::span<const Cell> cells,
                      std::span<const FitResult> fits, const ColorScale& scale,
                      const TreemapStyle& style) {
  if (cells.size() != fits.size()) throw Error("treemap needs exactly one fit result per cell");
  const FontMetrics& font = style.font;
  SvgDoc doc{style.width, style.height, font.family, {}};
  doc.body.push_back(rect_element({0, 0, style.width, style.height}, "#ffffff"));
  add_title(doc, style.title, font, style.padding);

  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& cell = cells[i];
    const Item& item = find_item(items, cell.item_id);
    const Rgb fill = item.color_value ? color_map(scale, *item.color_value) : style.neutral;
    const std::string ink = to_hex(contrast_text_color(fill));

    SvgElement g("g");
    g.attr("id", id_attr("cell-", item.id)).attr("class", "cell");
    g.add(rect_element(cell.outer, to_hex(fill)).attr("stroke", "#ffffff").attr("stroke-width", 1.0));

    const Rect& content = cell.content;
    if (content.h + 1e-9 >= font.line_height && content.w > 0.0) {
      const std::string label = fit_single_line(item.label, content.w, font, true);
      if (!label.empty()) {
        g.add(text_element(label, content.x, line_baseline(content.y, 0, font), font.font_size, ink,
                           true, false, "label"));
      }
    }
    const Rect area = treemap_text_area(cell, font);
    const auto capacity = static_cast<std::size_t>(std::floor(area.h / font.line_height + 1e-9));
    if (fits[i].lines.size() > capacity) {
      throw Error("fit result for '" + item.id + "' has more lines than its cell holds");
    }
    for (std::size_t l = 0; l < fits[i].lines.size(); ++l) {
      g.add(text_element(fits[i].lines[l], area.x, line_baseline(area.y, static_cast<int>(l), font),
                         font.font_size, ink, false, false, "line"));
    }
    doc.body.push_back(std::move(g));
  }
  return doc;
}

// ---------------------------------------------------------------------------

Rect barchart_bounds(const BarchartStyle& style) {
  const double lh = style.font.line_height;
  const double top = std::max(title_band(style.title, style.font), lh);
  const double bottom = 1.5 * lh;
  const double side = 2.0 * style.padding;
  return {side, top, std::max(0.0, style.width - 2.0 * side),
          std::max(0.0, style.height - top - bottom)};
}

Rect barchart_text_area(const BarSlot& slot, const BarchartStyle& style) {
  if (style.overlay) return slot.column.inset(style.padding);
  Rect r = slot.implied.inset(style.padding);
  r.h = std::max(0.0, r.h - style.font.line_height);
  return r;
}

SvgDoc render_barchart(std::span<const Item> items, std::span<const BarSlot> slots,
                       std::span<const FitResult> fits, const std::optional<ColorScale>& scale,
                       const BarchartStyle& style) {
  if (slots.size() != fits.size()) throw Error("bar chart needs exactly one fit result per bar");
  const FontMetrics& font = style.font;
  SvgDoc doc{style.width, style.height, font.family, {}};
  doc.body.push_back(rect_element({0, 0, style.width, style.height}, "#ffffff"));
  add_title(doc, style.title, font, 2.0 * style.padding);
  const Rect plot = barchart_bounds(style);

  // Bars, then column text, then the axis and labels.
  std::vector<SvgElement> bars;
  std::vector<SvgElement> texts;
  std::vector<SvgElement> labels;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const BarSlot& slot = slots[i];
    const Item& item = find_item(items, slot.item_id);
    const Rgb fill = (scale && item.color_value) ? color_map(*scale, *item.color_value) : style.bar_fill;
    bars.push_back(rect_element(slot.bar, to_hex(fill)).attr("class", "bar").attr(
        "id", id_attr("bar-", item.id)));

    const Rect area = barchart_text_area(slot, style);
    const auto capacity = static_cast<std::size_t>(std::floor(area.h / font.line_height + 1e-9));
    if (fits[i].lines.size() > capacity) {
      throw Error("fit result for '" + item.id + "' has more lines than its column holds");
    }
    SvgElement g("g");
    g.attr("id", id_attr("text-", item.id)).attr("class", "column-text");
    if (style.overlay) {
      g.attr("stroke", "#ffffff").attr("stroke-width", 3.0).attr("paint-order", "stroke");
    }
    for (std::size_t l = 0; l < fits[i].lines.size(); ++l) {
      g.add(text_element(fits[i].lines[l], area.x, line_baseline(area.y, static_cast<int>(l), font),
                         font.font_size, "#222222", false, false, "line"));
    }
    texts.push_back(std::move(g));

    const std::string value = format_number(item.size_value);
    const double value_w = measure(value, font, true);
    const double value_x = slot.column.x + std::max(0.0, (slot.column.w - value_w) / 2.0);
    const double value_top = std::max(slot.column.y, slot.bar.y - style.padding - font.line_height);
    labels.push_back(text_element(value, value_x, line_baseline(value_top, 0, font), font.font_size,
                                  "#222222", true, false, "value"));
    const std::string name = fit_single_line(item.label, slot.column.w, font, false);
    if (!name.empty()) {
      const double name_x = slot.column.x + std::max(0.0, (slot.column.w - measure(name, font)) / 2.0);
      labels.push_back(text_element(name, name_x, line_baseline(plot.bottom() + 0.25 * font.line_height, 0, font),
                                    font.font_size, "#222222", false, false, "category"));
    }
  }
  SvgElement axis("line");
  axis.attr("x1", plot.x).attr("y1", plot.bottom()).attr("x2", plot.right()).attr("y2", plot.bottom())
      .attr("stroke", "#444444").attr("stroke-width", 1.0);
  for (auto& e : bars) doc.body.push_back(std::move(e));
  for (auto& e : texts) doc.body.push_back(std::move(e));
  doc.body.push_back(std::move(axis));
  for (auto& e : labels) doc.body.push_back(std::move(e));
  return doc;
}

// ---------------------------------------------------------------------------

std::string_view to_string(MarkupChannel c) {
  switch (c) {
    case MarkupChannel::Background: return "background";
    case MarkupChannel::Weight: return "weight";
    case MarkupChannel::Italic: return "italic";
    case MarkupChannel::Color: return "color";
  }
  return "background";
}

MarkupChannel parse_markup_channel(std::string_view name) {
  for (auto c : {MarkupChannel::Background, MarkupChannel::Weight, MarkupChannel::Italic,
                 MarkupChannel::Color}) {
    if (to_string(c) == name) return c;
  }
  throw Error("unknown markup channel '" + std::string(name) + "'");
}

namespace {

struct CharStyle {
  std::optional<Rgb> background;
  std::optional<Rgb> color;
  bool bold = false;
  bool italic = false;

  friend bool operator==(const CharStyle&, const CharStyle&) = default;
};

constexpr std::array<Rgb, 10> kCategoryPalette = {{{0x4e, 0x79, 0xa7}, {0xf2, 0x8e, 0x2b},
                                                   {0xe1, 0x57, 0x59}, {0x76, 0xb7, 0xb2},
                                                   {0x59, 0xa1, 0x4f}, {0xed, 0xc9, 0x48},
                                                   {0xb0, 0x7a, 0xa1}, {0xff, 0x9d, 0xa7},
                                                   {0x9c, 0x75, 0x5f}, {0xba, 0xb0, 0xac}}};

struct StyledLine {
  std::vector<std::size_t> chars;  // indices into the source text, single spaces between words
};

// Greedy wrap that measures bold characters at their bold width.
std::vector<StyledLine> wrap_styled(std::u32string_view text, const std::vector<CharStyle>& styles,
                                    double width, const FontMetrics& font) {
  const auto adv = [&](std::size_t i) {
    return font.advance(text[i]) * font.font_size * (styles[i].bold ? font.bold_scale : 1.0);
  };
  std::vector<StyledLine> lines;
  StyledLine line;
  double line_w = 0.0;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && utf8::is_space(text[i])) ++i;
    const std::size_t begin = i;
    double word_w = 0.0;
    while (i < text.size() && !utf8::is_space(text[i])) word_w += adv(i++);
    if (begin == i) break;
    if (!line.chars.empty()) {
      const std::size_t space = begin - 1;  // whitespace preceding the word
      const double candidate = line_w + adv(space) + word_w;
      if (candidate <= width + 1e-9) {
        line.chars.push_back(space);
        for (std::size_t k = begin; k < i; ++k) line.chars.push_back(k);
        line_w = candidate;
        continue;
      }
      lines.push_back(std::move(line));
      line = {};
    }
    for (std::size_t k = begin; k < i; ++k) line.chars.push_back(k);
    line_w = word_w;
  }
  if (!line.chars.empty()) lines.push_back(std::move(line));
  return lines;
}

void emit_styled_lines(SvgElement& g, std::u32string_view text, const std::vector<CharStyle>& styles,
                       const std::vector<StyledLine>& lines, double x0, double top,
                       const FontMetrics& font) {
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto& chars = lines[l].chars;
    const double line_top = top + static_cast<double>(l) * font.line_height;
    const double baseline = line_baseline(top, static_cast<int>(l), font);
    double x = x0;
    std::size_t k = 0;
    while (k < chars.size()) {
      const CharStyle& st = styles[chars[k]];
      std::size_t end = k;
      double run_w = 0.0;
      double lead_w = 0.0;
      bool leading = true;
      std::u32string run;
      while (end < chars.size() && styles[chars[end]] == st) {
        const char32_t c = utf8::is_space(text[chars[end]]) ? U' ' : text[chars[end]];
        const double a = font.advance(c) * font.font_size * (st.bold ? font.bold_scale : 1.0);
        if (leading && c == U' ') {
          lead_w += a;
        } else {
          leading = false;
          run.push_back(c);
        }
        run_w += a;
        ++end;
      }
      if (st.background) {
        g.add(rect_element({x, line_top, run_w, font.line_height}, to_hex(*st.background))
                  .attr("class", "highlight"));
      }
      while (!run.empty() && run.back() == U' ') run.pop_back();
      if (!run.empty()) {
        const Rgb ink = st.color ? *st.color
                                 : (st.background ? contrast_text_color(*st.background) : Rgb{0x22, 0x22, 0x22});
        g.add(text_element(utf8::encode(run), x + lead_w, baseline, font.font_size, to_hex(ink), st.bold,
                           st.italic, "run"));
      }
      x += run_w;
      k = end;
    }
  }
}

}  // namespace

SvgDoc render_markup(std::string_view text, std::span<const MarkupSpan> spans,
                     const ColorScale& scale, const MarkupStyle& style) {
  const std::u32string cps = utf8::decode(text);
  std::vector<CharStyle> styles(cps.size());
  std::map<std::string, std::size_t> categories;
  for (std::size_t s = 0; s < spans.size(); ++s) {
    const MarkupSpan& m = spans[s];
    if (m.span.begin > m.span.end || m.span.end > cps.size()) {
      throw Error("markup span " + std::to_string(s) + " [" + std::to_string(m.span.begin) + ", " +
                  std::to_string(m.span.end) + ") is outside the text");
    }
    Rgb color{};
    if (const double* score = std::get_if<double>(&m.value)) {
      if (!(*score >= -1.0 && *score <= 1.0)) {
        throw Error("markup span " + std::to_string(s) + " score outside [-1, 1]");
      }
      color = color_map(scale, *score);
    } else {
      const auto& name = std::get<std::string>(m.value);
      const auto [it, inserted] = categories.try_emplace(name, categories.size());
      color = kCategoryPalette[it->second % kCategoryPalette.size()];
    }
    for (std::size_t i = m.span.begin; i < m.span.end; ++i) {
      switch (m.channel) {
        case MarkupChannel::Background: styles[i].background = color; break;
        case MarkupChannel::Color: styles[i].color = color; break;
        case MarkupChannel::Weight: styles[i].bold = true; break;
        case MarkupChannel::Italic: styles[i].italic = true; break;
      }
    }
  }

  const FontMetrics& font = style.font;
  const double inner = style.width - 2.0 * style.margin;
  const bool two_columns = style.side_text.has_value();
  const double col_w = two_columns ? (inner - style.margin) / 2.0 : inner;
  if (!(col_w > 0.0)) throw Error("markup page is too narrow");

  double top = style.margin;
  SvgDoc doc{style.width, 0.0, font.family, {}};
  if (!style.title.empty()) {
    const FontMetrics big = scaled(font, 1.5);
    doc.body.push_back(text_element(style.title, style.margin, line_baseline(top, 0, big), big.font_size,
                                    "#222222", true, false, "title"));
    top += big.line_height * 1.5;
  }
  if (two_columns) {
    doc.body.push_back(text_element("Source", style.margin, line_baseline(top, 0, font), font.font_size,
                                    "#222222", true, false, "heading"));
    doc.body.push_back(text_element("Summary", style.margin + col_w + style.margin,
                                    line_baseline(top, 0, font), font.font_size, "#222222", true,
                                    false, "heading"));
    top += font.line_height * 1.5;
  }

  SvgElement source("g");
  source.attr("class", "source");
  double bottom = top;
  double para_top = top;
  // Blank lines separate paragraphs; each is wrapped on its own.
  std::size_t p = 0;
  while (p < cps.size()) {
    std::size_t end = p;
    while (end < cps.size()) {
      if (cps[end] == U'\n') {
        std::size_t k = end + 1;
        while (k < cps.size() && cps[k] != U'\n' && utf8::is_space(cps[k])) ++k;
        if (k < cps.size() && cps[k] == U'\n') break;
      }
      ++end;
    }
    std::vector<CharStyle> local(styles.begin() + static_cast<std::ptrdiff_t>(p),
                                 styles.begin() + static_cast<std::ptrdiff_t>(end));
    const std::u32string_view para(cps.data() + p, end - p);
    const auto lines = wrap_styled(para, local, col_w, font);
    if (!lines.empty()) {
      emit_styled_lines(source, para, local, lines, style.margin, para_top, font);
      para_top += static_cast<double>(lines.size()) * font.line_height;
      bottom = para_top;
      para_top += font.line_height / 2.0;
    }
    p = end;
    while (p < cps.size() && utf8::is_space(cps[p])) ++p;
  }
  doc.body.push_back(std::move(source));

  if (two_columns) {
    SvgElement side("g");
    side.attr("class", "summary");
    const auto lines = wrap_greedy(*style.side_text, col_w, font);
    const double x = style.margin + col_w + style.margin;
    for (std::size_t l = 0; l < lines.size(); ++l) {
      side.add(text_element(lines[l].text, x, line_baseline(top, static_cast<int>(l), font), font.font_size,
                            "#222222", false, false, "line"));
    }
    bottom = std::max(bottom, top + static_cast<double>(lines.size()) * font.line_height);
    doc.body.push_back(std::move(side));
  }

  doc.height = std::ceil(bottom + style.margin);
  doc.body.insert(doc.body.begin(), rect_element({0, 0, style.width, doc.height}, "#ffffff"));
  return doc;
}

// ---------------------------------------------------------------------------

SvgDoc render_landmark_prose(const Document& doc, const SummaryTree& tree,
                             const LandmarkStyle& style) {
  const FontMetrics& font = style.font;
  const FontMetrics big = scaled(font, style.landmark_scale);
  const FontMetrics heading_font = scaled(font, 1.5);
  const double col_w = style.width - 2.0 * style.margin;
  if (!(col_w > 0.0)) throw Error("landmark page is too narrow");
  const std::u32string body = utf8::decode(doc.body);
  const std::string fill = to_hex(style.landmark_fill);

  SvgDoc out{style.width, 0.0, font.family, {}};
  std::vector<SvgElement> elements;
  double y = style.margin;
  for (std::size_t chapter_index : tree.chapters) {
    const SummaryNode& chapter = tree.nodes.at(chapter_index);
    if (!chapter.heading.empty()) {
      const auto lines = wrap_greedy(chapter.heading, col_w, heading_font, true);
      for (std::size_t l = 0; l < lines.size(); ++l) {
        elements.push_back(text_element(lines[l].text, style.margin,
                                        line_baseline(y, static_cast<int>(l), heading_font),
                                        heading_font.font_size, "#222222", true, false, "heading"));
      }
      y += static_cast<double>(lines.size()) * heading_font.line_height + font.line_height;
    }
    for (std::size_t leaf_index : chapter.children) {
      const SummaryNode& leaf = tree.nodes.at(leaf_index);
      SvgElement prose("g");
      prose.attr("class", "prose").attr("data-node", leaf.id);
      double prose_y = y;
      bool first_para = true;
      for (const CharSpan& para : doc.paragraphs) {
        const CharSpan piece{std::max(para.begin, leaf.span.begin), std::min(para.end, leaf.span.end)};
        if (piece.begin >= piece.end) continue;
        if (!first_para) prose_y += font.line_height / 2.0;
        first_para = false;
        const std::string text = utf8::encode(std::u32string_view(body).substr(piece.begin, piece.size()));
        const auto lines = wrap_greedy(text, col_w, font);
        for (std::size_t l = 0; l < lines.size(); ++l) {
          prose.add(text_element(lines[l].text, style.margin, line_baseline(prose_y, static_cast<int>(l), font),
                                 font.font_size, "#111111", false, false, "line"));
        }
        prose_y += static_cast<double>(lines.size()) * font.line_height;
      }

      double block_bottom = prose_y;
      if (style.opacity > 0.0 && !leaf.summary.text.empty()) {
        SvgElement landmark("g");
        landmark.attr("class", "landmark").attr("data-node", leaf.id).attr("opacity", style.opacity);
        const auto lines = wrap_greedy(leaf.summary.text, col_w, big, true);
        for (std::size_t l = 0; l < lines.size(); ++l) {
          landmark.add(text_element(lines[l].text, style.margin, line_baseline(y, static_cast<int>(l), big),
                                    big.font_size, fill, true, false, "landmark-line"));
        }
        block_bottom = std::max(block_bottom, y + static_cast<double>(lines.size()) * big.line_height);
        elements.push_back(std::move(landmark));
      }
      elements.push_back(std::move(prose));
      y = block_bottom + font.line_height;
    }
  }
  out.height = std::ceil(y + style.margin);
  out.body.push_back(rect_element({0, 0, style.width, out.height}, "#ffffff"));
  for (auto& e : elements) out.body.push_back(std::move(e));
  return out;
}

}  // namespace proseviz
