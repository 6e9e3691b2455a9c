#include "proseviz/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "proseviz/common.hpp"

namespace proseviz {

Rect Rect::inset(double amount) const {
  Rect r = *this;
  const double dx = std::min(amount, w / 2.0);
  const double dy = std::min(amount, h / 2.0);
  r.x += dx;
  r.y += dy;
  r.w -= 2.0 * dx;
  r.h -= 2.0 * dy;
  return r;
}

bool Rect::contains(const Rect& o, double eps) const {
  return o.x >= x - eps && o.y >= y - eps && o.right() <= right() + eps &&
         o.bottom() <= bottom() + eps;
}

double aspect_ratio(const Rect& r) {
  if (r.w <= 0.0 || r.h <= 0.0) return std::numeric_limits<double>::infinity();
  return std::max(r.w / r.h, r.h / r.w);
}

namespace {

struct Entry {
  std::size_t item = 0;
  double area = 0.0;
};

double worst_ratio(std::span<const Entry> row, double side) {
  double sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& e : row) {
    sum += e.area;
    lo = std::min(lo, e.area);
    hi = std::max(hi, e.area);
  }
  const double side2 = side * side;
  const double sum2 = sum * sum;
  return std::max(side2 * hi / sum2, sum2 / (side2 * lo));
}

// Places `row` against the shorter side of `free` and shrinks `free`. The final
// row consumes the remaining rectangle exactly.
void place_row(std::span<const Entry> row, Rect& free, bool last,
               std::vector<std::pair<std::size_t, Rect>>& out) {
  double sum = 0.0;
  for (const auto& e : row) sum += e.area;
  const bool vertical = free.w >= free.h;  // row stacked down the left edge
  const double length = vertical ? free.h : free.w;
  const double thickness = last ? (vertical ? free.w : free.h) : sum / length;
  double offset = 0.0;
  for (std::size_t k = 0; k < row.size(); ++k) {
    const double extent = k + 1 == row.size() ? length - offset : row[k].area / thickness;
    const Rect r = vertical ? Rect{free.x, free.y + offset, thickness, extent}
                            : Rect{free.x + offset, free.y, extent, thickness};
    out.emplace_back(row[k].item, r);
    offset += extent;
  }
  if (vertical) {
    free.x += thickness;
    free.w = std::max(0.0, free.w - thickness);
  } else {
    free.y += thickness;
    free.h = std::max(0.0, free.h - thickness);
  }
}

void check_size(double v) {
  if (!std::isfinite(v)) throw Error("item size must be finite");
  if (v < 0.0) throw Error("item size must be non-negative");
}

}  // namespace

std::vector<Cell> squarified_treemap(std::span<const Item> items, const Rect& bounds,
                                     double padding) {
  if (!(bounds.w > 0.0 && bounds.h > 0.0)) throw Error("treemap bounds must have positive area");
  double total = 0.0;
  for (const auto& it : items) {
    check_size(it.size_value);
    total += it.size_value;
  }
  if (!(total > 0.0)) throw Error("degenerate input: no item has a positive size");

  std::vector<Entry> entries;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].size_value > 0.0) {
      entries.push_back({i, items[i].size_value / total * bounds.area()});
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.area > b.area; });

  std::vector<std::pair<std::size_t, Rect>> placed;
  Rect free = bounds;
  std::size_t row_begin = 0;
  std::size_t i = 1;
  while (i < entries.size()) {
    const double side = std::min(free.w, free.h);
    const std::span<const Entry> row(entries.data() + row_begin, i - row_begin);
    const std::span<const Entry> grown(entries.data() + row_begin, i - row_begin + 1);
    if (worst_ratio(grown, side) <= worst_ratio(row, side)) {
      ++i;
      continue;
    }
    place_row(row, free, false, placed);
    row_begin = i++;
  }
  place_row(std::span<const Entry>(entries.data() + row_begin, entries.size() - row_begin), free,
            true, placed);

  std::vector<Cell> cells;
  cells.reserve(placed.size());
  for (const auto& [item, rect] : placed) {
    cells.push_back({items[item].id, rect, rect.inset(padding)});
  }
  return cells;
}

std::vector<BarSlot> barchart_layout(std::span<const Item> items, const Rect& bounds, double gap) {
  if (items.empty()) throw Error("bar chart needs at least one item");
  if (gap < 0.0) throw Error("bar gap must be non-negative");
  double max_value = 0.0;
  for (const auto& it : items) {
    check_size(it.size_value);
    max_value = std::max(max_value, it.size_value);
  }
  const double n = static_cast<double>(items.size());
  const double col_w = (bounds.w - gap * (n - 1.0)) / n;
  if (col_w < 0.0) throw Error("bar gap leaves no room for columns");

  std::vector<BarSlot> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const double x = bounds.x + static_cast<double>(i) * (col_w + gap);
    const double h =
        max_value > 0.0 ? items[i].size_value / max_value * kBarHeadroom * bounds.h : 0.0;
    const Rect column{x, bounds.y, col_w, bounds.h};
    const Rect bar{x, bounds.bottom() - h, col_w, h};
    const Rect implied{x, bounds.y, col_w, bounds.h - h};
    out.push_back({items[i].id, column, bar, implied});
  }
  return out;
}

double luminance(const Rgb& c) {
  return (0.2126 * c.r + 0.7152 * c.g + 0.0722 * c.b) / 255.0;
}

std::string to_hex(const Rgb& c) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = "#";
  for (std::uint8_t v : {c.r, c.g, c.b}) {
    out.push_back(kDigits[v >> 4]);
    out.push_back(kDigits[v & 0xF]);
  }
  return out;
}

Rgb parse_hex(std::string_view hex) {
  const auto digit = [&](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw Error("invalid hex color '" + std::string(hex) + "'");
  };
  if (hex.size() != 7 || hex[0] != '#') throw Error("invalid hex color '" + std::string(hex) + "'");
  const auto byte = [&](std::size_t k) {
    return static_cast<std::uint8_t>(digit(hex[k]) * 16 + digit(hex[k + 1]));
  };
  return {byte(1), byte(3), byte(5)};
}

ColorScale::ColorScale(double min, double max, std::vector<ColorStop> stops, ScaleKind kind)
    : min_(min), max_(max), stops_(std::move(stops)), kind_(kind) {
  if (!(std::isfinite(min) && std::isfinite(max) && min < max)) {
    throw Error("color scale domain requires min < max");
  }
  if (stops_.empty()) throw Error("color scale needs at least one stop");
  for (std::size_t i = 0; i < stops_.size(); ++i) {
    if (!(stops_[i].t >= 0.0 && stops_[i].t <= 1.0)) throw Error("color stop outside [0, 1]");
    if (i > 0 && stops_[i].t < stops_[i - 1].t) throw Error("color stops must be ordered");
  }
}

ColorScale ColorScale::red_yellow_green(double min, double max) {
  return ColorScale(min, max,
                    {{0.0, parse_hex("#d73027")}, {0.5, parse_hex("#ffffbf")},
                     {1.0, parse_hex("#1a9850")}},
                    ScaleKind::Diverging);
}

ColorScale ColorScale::green_yellow_red(double min, double max) {
  return ColorScale(min, max,
                    {{0.0, parse_hex("#1a9850")}, {0.5, parse_hex("#ffffbf")},
                     {1.0, parse_hex("#d73027")}},
                    ScaleKind::Diverging);
}

Rgb color_map(const ColorScale& scale, double v) {
  const auto& stops = scale.stops();
  if (std::isnan(v)) return stops.front().color;
  const double t = (std::clamp(v, scale.min(), scale.max()) - scale.min()) / (scale.max() - scale.min());
  if (t <= stops.front().t) return stops.front().color;
  if (t >= stops.back().t) return stops.back().color;
  std::size_t k = 1;
  while (k < stops.size() && stops[k].t < t) ++k;
  const ColorStop& a = stops[k - 1];
  const ColorStop& b = stops[k];
  const double u = b.t > a.t ? (t - a.t) / (b.t - a.t) : 1.0;
  const auto mix = [u](std::uint8_t x, std::uint8_t y) {
    return static_cast<std::uint8_t>(std::lround(x + (static_cast<double>(y) - x) * u));
  };
  return {mix(a.color.r, b.color.r), mix(a.color.g, b.color.g), mix(a.color.b, b.color.b)};
}

}  // namespace proseviz
