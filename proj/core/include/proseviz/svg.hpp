#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace proseviz {

// Fixed-point with at most two decimals, trailing zeros trimmed, no "-0".
std::string format_number(double v);
std::string xml_escape(std::string_view text);

// Minimal SVG element tree. Attributes serialize in insertion order.
class SvgElement {
 public:
  explicit SvgElement(std::string name) : name_(std::move(name)) {}

  SvgElement& attr(std::string key, std::string value);
  SvgElement& attr(std::string key, double value);
  SvgElement& text(std::string content);
  SvgElement& add(SvgElement child);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::vector<SvgElement>& children() const { return children_; }
  void write(std::string& out, int depth) const;

 private:
  std::string name_;
  std::vector<std::pair<std::string, std::string>> attrs_;
  std::string text_;
  std::vector<SvgElement> children_;
};

struct SvgDoc {
  double width = 0.0;
  double height = 0.0;
  std::string font_family;
  std::vector<SvgElement> body;

  [[nodiscard]] std::string str() const;
};

}  // namespace proseviz
