#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace proseviz {

struct Item {
  std::string id;
  double size_value = 0.0;
  std::optional<double> color_value;
  std::string label;
  std::string text;

  friend bool operator==(const Item&, const Item&) = default;
};

struct Rect {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  [[nodiscard]] double area() const { return w * h; }
  [[nodiscard]] double right() const { return x + w; }
  [[nodiscard]] double bottom() const { return y + h; }
  // Inset on every side, collapsing to a zero-size rect at the centre.
  [[nodiscard]] Rect inset(double amount) const;
  [[nodiscard]] bool contains(const Rect& other, double eps = 1e-9) const;

  friend bool operator==(const Rect&, const Rect&) = default;
};

// max(w/h, h/w); infinite for degenerate rectangles.
double aspect_ratio(const Rect& r);

struct Cell {
  std::string item_id;
  Rect outer;
  Rect content;  // outer inset by padding
};

// Row-based squarified treemap. Zero-size items are dropped; items are placed
// in descending size order (stable for ties). Throws Error on negative or
// non-finite sizes and when no size is positive.
std::vector<Cell> squarified_treemap(std::span<const Item> items, const Rect& bounds,
                                     double padding = 2.0);

struct BarSlot {
  std::string item_id;
  Rect column;   // full column, bounds top to bounds bottom
  Rect bar;      // anchored at the column bottom
  Rect implied;  // column top down to the bar top
};

// Equal-width columns with `gap` between neighbours; the largest value spans
// 90% of the bounds height.
std::vector<BarSlot> barchart_layout(std::span<const Item> items, const Rect& bounds, double gap);
inline constexpr double kBarHeadroom = 0.9;

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Relative luminance in [0, 1] with Rec. 709 weights over gamma-encoded channels.
double luminance(const Rgb& c);
std::string to_hex(const Rgb& c);
Rgb parse_hex(std::string_view hex);  // "#rrggbb"; throws Error

enum class ScaleKind { Sequential, Diverging };

struct ColorStop {
  double t = 0.0;
  Rgb color;
};

class ColorScale {
 public:
  // Throws Error unless min < max and stops are non-empty, within [0, 1], and
  // ordered by t.
  ColorScale(double min, double max, std::vector<ColorStop> stops,
             ScaleKind kind = ScaleKind::Sequential);

  // Red–yellow–green, low values red.
  static ColorScale red_yellow_green(double min, double max);
  static ColorScale green_yellow_red(double min, double max);

  [[nodiscard]] double min() const { return min_; }
  [[nodiscard]] double max() const { return max_; }
  [[nodiscard]] ScaleKind kind() const { return kind_; }
  [[nodiscard]] const std::vector<ColorStop>& stops() const { return stops_; }

 private:
  double min_;
  double max_;
  std::vector<ColorStop> stops_;
  ScaleKind kind_;
};

// Clamps v to the domain and interpolates linearly per channel between the
// neighbouring stops. NaN maps to the first stop.
Rgb color_map(const ColorScale& scale, double v);

}  // namespace proseviz
