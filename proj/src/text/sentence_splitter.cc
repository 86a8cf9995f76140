#include "reqlint/text/sentence_splitter.h"

#include "reqlint/common/error.h"
#include "reqlint/common/utf8.h"
#include "reqlint/text/tokenizer.h"

namespace reqlint::text {
namespace {

bool is_terminator(const Token& t) {
  if (t.is_word || t.surface.empty()) return false;
  for (char c : t.surface) {
    if (c != '.' && c != '!' && c != '?') return false;
  }
  return true;
}

bool is_closer(const Token& t) {
  static constexpr std::string_view kClosers[] = {")", "]", "}", "\"", "'", "”", "’", "»"};
  for (auto c : kClosers) {
    if (t.surface == c) return true;
  }
  return false;
}

}  // namespace

SentenceSplit split_sentences(std::string_view text, const std::vector<Token>& tokens) {
  if (tokens.empty()) raise(ErrorCode::kEmptyText, "text has no tokens");

  SentenceSplit out;
  const auto close = [&](std::size_t first, std::size_t last) {
    out.sentences.push_back({tokens[first].span.begin, tokens[last - 1].span.end});
    out.token_ranges.emplace_back(first, last);
  };

  std::size_t start = 0;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (!is_terminator(tokens[k])) continue;
    std::size_t end = k;
    while (end + 1 < tokens.size() && tokens[end + 1].span.begin == tokens[end].span.end &&
           is_closer(tokens[end + 1])) {
      ++end;
    }
    const std::size_t after = tokens[end].span.end;
    if (after < text.size() && !utf8::is_space(utf8::decode(text, after).cp)) continue;
    close(start, end + 1);
    start = end + 1;
    k = end;
  }
  if (start < tokens.size()) close(start, tokens.size());
  return out;
}

SentenceSplit split_sentences(std::string_view text) { return split_sentences(text, tokenize(text)); }

}  // namespace reqlint::text
