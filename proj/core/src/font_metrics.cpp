#include <utility>

#include "proseviz/textfit.hpp"

namespace proseviz {
namespace {

// Advance widths of the standard Helvetica face in 1/1000 em.
constexpr std::pair<char32_t, int> kSansWidths[] = {
    {U' ', 278},  {U'!', 278},  {U'"', 355},  {U'#', 556},  {U'$', 556},  {U'%', 889},
    {U'&', 667},  {U'\'', 191}, {U'(', 333},  {U')', 333},  {U'*', 389},  {U'+', 584},
    {U',', 278},  {U'-', 333},  {U'.', 278},  {U'/', 278},  {U'0', 556},  {U'1', 556},
    {U'2', 556},  {U'3', 556},  {U'4', 556},  {U'5', 556},  {U'6', 556},  {U'7', 556},
    {U'8', 556},  {U'9', 556},  {U':', 278},  {U';', 278},  {U'<', 584},  {U'=', 584},
    {U'>', 584},  {U'?', 556},  {U'@', 1015}, {U'A', 667},  {U'B', 667},  {U'C', 722},
    {U'D', 722},  {U'E', 667},  {U'F', 611},  {U'G', 778},  {U'H', 722},  {U'I', 278},
    {U'J', 500},  {U'K', 667},  {U'L', 556},  {U'M', 833},  {U'N', 722},  {U'O', 778},
    {U'P', 667},  {U'Q', 778},  {U'R', 722},  {U'S', 667},  {U'T', 611},  {U'U', 722},
    {U'V', 667},  {U'W', 944},  {U'X', 667},  {U'Y', 667},  {U'Z', 611},  {U'[', 278},
    {U'\\', 278}, {U']', 278},  {U'^', 469},  {U'_', 556},  {U'`', 333},  {U'a', 556},
    {U'b', 556},  {U'c', 500},  {U'd', 556},  {U'e', 556},  {U'f', 278},  {U'g', 556},
    {U'h', 556},  {U'i', 222},  {U'j', 222},  {U'k', 500},  {U'l', 222},  {U'm', 833},
    {U'n', 556},  {U'o', 556},  {U'p', 556},  {U'q', 556},  {U'r', 333},  {U's', 500},
    {U't', 278},  {U'u', 556},  {U'v', 500},  {U'w', 722},  {U'x', 500},  {U'y', 500},
    {U'z', 500},  {U'{', 334},  {U'|', 260},  {U'}', 334},  {U'~', 584},  {0x00A0, 278},
    {0x00E9, 556}, {0x2013, 556}, {0x2014, 1000}, {0x2018, 222}, {0x2019, 222},
    {0x201C, 333}, {0x201D, 333}, {0x2022, 350}, {0x2026, 1000},
};

}  // namespace

double FontMetrics::advance(char32_t c) const {
  if (advances) {
    const auto it = advances->find(c);
    if (it != advances->end()) return it->second;
  }
  return fallback_advance;
}

FontMetrics FontMetrics::sans(double font_size) {
  static const auto table = [] {
    auto t = std::make_shared<std::unordered_map<char32_t, double>>();
    for (const auto& [c, w] : kSansWidths) t->emplace(c, w / 1000.0);
    return std::shared_ptr<const std::unordered_map<char32_t, double>>(std::move(t));
  }();
  FontMetrics m;
  m.font_size = font_size;
  m.line_height = 1.25 * font_size;
  m.advances = table;
  return m;
}

FontMetrics FontMetrics::uniform(double font_size, double advance, double line_height) {
  FontMetrics m;
  m.font_size = font_size;
  m.line_height = line_height > 0.0 ? line_height : 1.25 * font_size;
  m.fallback_advance = advance;
  m.average_advance = advance;
  m.bold_scale = 1.0;
  return m;
}

}  // namespace proseviz
