#pragma once

#include <string>
#include <string_view>

#include "proseviz/common.hpp"

// UTF-8 helpers. Malformed input decodes to U+FFFD rather than throwing;
// callers that need strictness check is_valid() first.
namespace proseviz::utf8 {

std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

bool is_valid(std::string_view text);
std::size_t length(std::string_view text);

// Substring by scalar-value span; out-of-range ends are clamped.
std::string slice(std::string_view text, CharSpan span);

bool is_space(char32_t cp);
bool is_alnum(char32_t cp);
bool is_alpha(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);

std::string to_lower(std::string_view text);

}  // namespace proseviz::utf8
