#include "reqlint/text/pipeline.h"

#include <algorithm>

#include "reqlint/common/error.h"
#include "reqlint/text/tokenizer.h"

namespace reqlint::text {

std::size_t Analysis::word_count() const {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.is_word; }));
}

std::size_t Analysis::sentence_of(std::size_t token_index) const {
  const auto& ranges = sentences.token_ranges;
  for (std::size_t s = 0; s < ranges.size(); ++s) {
    if (token_index < ranges[s].second) return s;
  }
  return ranges.empty() ? 0 : ranges.size() - 1;
}

Analyzer::Analyzer(std::shared_ptr<const Lemmatizer> lemmatizer,
                   std::shared_ptr<const PerceptronTagger> tagger)
    : lemmatizer_(std::move(lemmatizer)), tagger_(std::move(tagger)) {
  if (!lemmatizer_ || !tagger_) raise(ErrorCode::kInvalidArgs, "analyzer needs a lemmatizer and a tagger");
}

const Analyzer& Analyzer::default_instance() {
  static const Analyzer instance(Lemmatizer::default_instance(), PerceptronTagger::default_instance());
  return instance;
}

Analysis Analyzer::analyze(std::string_view text) const {
  Analysis a;
  a.text = std::string(text);
  a.tokens = tokenize(a.text);
  a.sentences = split_sentences(a.text, a.tokens);
  for (const auto& [first, last] : a.sentences.token_ranges) tagger_->tag(a.tokens, first, last);
  for (auto& t : a.tokens) {
    t.lemma = t.is_word ? lemmatizer_->lemmatize(t) : t.surface;
  }
  return a;
}

std::vector<std::string> Analyzer::lemmas(std::string_view text) const {
  std::vector<std::string> out;
  auto tokens = tokenize(text);
  if (tokens.empty()) return out;
  const auto split = split_sentences(text, tokens);
  for (const auto& [first, last] : split.token_ranges) tagger_->tag(tokens, first, last);
  for (const auto& t : tokens) {
    if (t.is_word) out.push_back(lemmatizer_->lemmatize(t));
  }
  return out;
}

}  // namespace reqlint::text
