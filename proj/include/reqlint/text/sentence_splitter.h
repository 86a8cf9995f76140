#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "reqlint/text/token.h"

namespace reqlint::text {

struct SentenceSplit {
  std::vector<CharSpan> sentences;
  // Half-open [first, last) token index ranges, parallel to `sentences`.
  std::vector<std::pair<std::size_t, std::size_t>> token_ranges;

  std::size_t count() const { return sentences.size(); }
};

// A sentence ends at a token made only of '.', '!' or '?', plus any closing
// brackets or quotes glued to it, when whitespace or end of text follows.
// Abbreviation and decimal dots never end a sentence because the tokenizer
// keeps them inside word tokens. Text without a terminator is one sentence.
//
// Throws Error(kEmptyText) when there are no tokens.
SentenceSplit split_sentences(std::string_view text, const std::vector<Token>& tokens);

// Convenience: tokenizes first.
SentenceSplit split_sentences(std::string_view text);

}  // namespace reqlint::text
