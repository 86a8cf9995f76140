#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace reqlint::text {

// Half-open byte range [begin, end) into UTF-8 source text. Offsets always
// fall on code point boundaries; services convert to code point offsets at
// the wire boundary.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool contains(const CharSpan& other) const {
    return begin <= other.begin && other.end <= end;
  }
  std::string_view slice(std::string_view text) const { return text.substr(begin, end - begin); }
  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

struct Token {
  std::string surface;
  std::string lemma;  // lowercase canonical form; empty until lemmatized
  std::string tag;    // Penn Treebank tag; empty until tagged
  CharSpan span;
  bool is_word = false;  // false for punctuation and symbols
};

}  // namespace reqlint::text
