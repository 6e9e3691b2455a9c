#include "proseviz/utf8.hpp"

#include <algorithm>

namespace proseviz::utf8 {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one scalar value at text[i]; advances i. Returns kReplacement for
// malformed, overlong, or surrogate sequences.
char32_t next(std::string_view text, std::size_t& i, bool* ok = nullptr) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
  const unsigned char lead = byte(i);
  if (ok != nullptr) *ok = true;
  if (lead < 0x80) {
    ++i;
    return lead;
  }
  int extra = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3, cp = lead & 0x07, min = 0x10000;
  } else {
    ++i;
    if (ok != nullptr) *ok = false;
    return kReplacement;
  }
  if (i + static_cast<std::size_t>(extra) >= text.size()) {
    ++i;
    if (ok != nullptr) *ok = false;
    return kReplacement;
  }
  for (int k = 1; k <= extra; ++k) {
    const unsigned char c = byte(i + k);
    if ((c & 0xC0) != 0x80) {
      ++i;
      if (ok != nullptr) *ok = false;
      return kReplacement;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  i += extra + 1;
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    if (ok != nullptr) *ok = false;
    return kReplacement;
  }
  return cp;
}

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

bool is_symbol_block(char32_t cp) {
  return in(cp, 0x2000, 0x2BFF) || in(cp, 0x3000, 0x303F) || in(cp, 0xFE30, 0xFE4F) ||
         in(cp, 0xFF00, 0xFF0F) || in(cp, 0xFF1A, 0xFF20) || in(cp, 0xFF3B, 0xFF40) ||
         in(cp, 0xFF5B, 0xFF65) || in(cp, 0xFFF0, 0xFFFF) || in(cp, 0x1F000, 0x1FAFF) ||
         in(cp, 0xE000, 0xF8FF);
}

}  // namespace

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) out.push_back(next(text, i));
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append(out, cp);
  return out;
}

bool is_valid(std::string_view text) {
  for (std::size_t i = 0; i < text.size();) {
    bool ok = true;
    next(text, i, &ok);
    if (!ok) return false;
  }
  return true;
}

std::size_t length(std::string_view text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size(); ++n) next(text, i);
  return n;
}

std::string slice(std::string_view text, CharSpan span) {
  std::size_t i = 0;
  std::size_t index = 0;
  while (i < text.size() && index < span.begin) {
    next(text, i);
    ++index;
  }
  const std::size_t start = i;
  while (i < text.size() && index < span.end) {
    next(text, i);
    ++index;
  }
  return std::string(text.substr(start, i - start));
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\f': case U'\v':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return in(cp, 0x2000, 0x200A);
  }
}

bool is_alpha(char32_t cp) {
  if (cp < 0x80) return in(cp, U'a', U'z') || in(cp, U'A', U'Z');
  if (cp < 0xC0) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (is_symbol_block(cp) || is_space(cp) || cp == kReplacement) return false;
  return true;
}

bool is_alnum(char32_t cp) { return in(cp, U'0', U'9') || is_alpha(cp); }

bool is_upper(char32_t cp) {
  if (cp < 0x80) return in(cp, U'A', U'Z');
  if (in(cp, 0xC0, 0xDE)) return cp != 0xD7;
  if (in(cp, 0x100, 0x17F)) return (cp % 2) == 0;
  if (in(cp, 0x391, 0x3A9)) return true;
  if (in(cp, 0x400, 0x42F)) return true;
  return false;
}

bool is_lower(char32_t cp) {
  if (cp < 0x80) return in(cp, U'a', U'z');
  if (in(cp, 0xDF, 0xFF)) return cp != 0xF7;
  if (in(cp, 0x100, 0x17F)) return (cp % 2) == 1;
  if (in(cp, 0x3B1, 0x3C9)) return true;
  if (in(cp, 0x430, 0x45F)) return true;
  return false;
}

char32_t to_lower(char32_t cp) {
  if (in(cp, U'A', U'Z')) return cp + 32;
  if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 32;
  if (in(cp, 0x100, 0x17F) && cp % 2 == 0) return cp + 1;
  if (in(cp, 0x391, 0x3A9)) return cp + 32;
  if (in(cp, 0x410, 0x42F)) return cp + 32;
  if (in(cp, 0x400, 0x40F)) return cp + 80;
  return cp;
}

char32_t to_upper(char32_t cp) {
  if (in(cp, U'a', U'z')) return cp - 32;
  if (in(cp, 0xE0, 0xFE) && cp != 0xF7) return cp - 32;
  if (in(cp, 0x100, 0x17F) && cp % 2 == 1) return cp - 1;
  if (in(cp, 0x3B1, 0x3C9) && cp != 0x3C2) return cp - 32;
  if (in(cp, 0x430, 0x44F)) return cp - 32;
  if (in(cp, 0x450, 0x45F)) return cp - 80;
  return cp;
}

std::string to_lower(std::string_view text) {
  std::u32string cps = decode(text);
  std::transform(cps.begin(), cps.end(), cps.begin(), [](char32_t c) { return to_lower(c); });
  return encode(cps);
}

}  // namespace proseviz::utf8
