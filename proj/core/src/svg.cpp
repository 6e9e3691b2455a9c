#include "proseviz/svg.hpp"

#include <charconv>
#include <cmath>

namespace proseviz {

std::string format_number(double v) {
  if (!std::isfinite(v)) return "0";
  const double rounded = std::round(v * 100.0) / 100.0;
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, rounded, std::chars_format::fixed, 2);
  std::string s(buf, ec == std::errc() ? ptr : buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

namespace {

std::string escape(std::string_view text, bool attribute) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        if (attribute) {
          out += "&quot;";
          break;
        }
        [[fallthrough]];
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string xml_escape(std::string_view text) { return escape(text, true); }

SvgElement& SvgElement::attr(std::string key, std::string value) {
  attrs_.emplace_back(std::move(key), std::move(value));
  return *this;
}

SvgElement& SvgElement::attr(std::string key, double value) {
  return attr(std::move(key), format_number(value));
}

SvgElement& SvgElement::text(std::string content) {
  text_ = std::move(content);
  return *this;
}

SvgElement& SvgElement::add(SvgElement child) {
  children_.push_back(std::move(child));
  return *this;
}

void SvgElement::write(std::string& out, int depth) const {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += '<';
  out += name_;
  for (const auto& [k, v] : attrs_) {
    out += ' ';
    out += k;
    out += "=\"";
    out += xml_escape(v);
    out += '"';
  }
  if (children_.empty() && text_.empty()) {
    out += "/>\n";
    return;
  }
  out += '>';
  if (!children_.empty()) {
    // Mixed content (text plus children) is not emitted; children win.
    out += '\n';
    for (const auto& c : children_) c.write(out, depth + 1);
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
  } else {
    out += escape(text_, false);
  }
  out += "</";
  out += name_;
  out += ">\n";
}

std::string SvgDoc::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  SvgElement root("svg");
  root.attr("xmlns", "http://www.w3.org/2000/svg")
      .attr("version", "1.1")
      .attr("width", width)
      .attr("height", height)
      .attr("viewBox", "0 0 " + format_number(width) + " " + format_number(height));
  if (!font_family.empty()) root.attr("font-family", font_family);
  for (const auto& e : body) root.add(e);
  root.write(out, 0);
  return out;
}

}  // namespace proseviz
