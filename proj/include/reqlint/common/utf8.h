#pragma once

#include <cstddef>
#include <string_view>

namespace reqlint::utf8 {

struct Decoded {
  char32_t cp;
  std::size_t length;  // bytes consumed, >= 1 even for malformed input
};

// Malformed sequences decode as U+FFFD with length 1.
Decoded decode(std::string_view text, std::size_t pos);

bool is_space(char32_t cp);
bool is_digit(char32_t cp);
// ASCII letters plus non-ASCII code points outside the punctuation/symbol blocks.
bool is_letter(char32_t cp);
inline bool is_alnum(char32_t cp) { return is_letter(cp) || is_digit(cp); }

// Number of code points in text[0, byte_offset).
std::size_t codepoint_offset(std::string_view text, std::size_t byte_offset);

}  // namespace reqlint::utf8
