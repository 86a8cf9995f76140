#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/text/lemmatizer.h"
#include "reqlint/text/pos_tagger.h"
#include "reqlint/text/sentence_splitter.h"
#include "reqlint/text/token.h"

namespace reqlint::text {

struct Analysis {
  std::string text;
  std::vector<Token> tokens;  // tagged and lemmatized
  SentenceSplit sentences;

  // n(w_R): tokens with is_word set.
  std::size_t word_count() const;
  std::size_t sentence_count() const { return sentences.count(); }
  // Index of the sentence containing token `i`.
  std::size_t sentence_of(std::size_t token_index) const;
};

// Tokenize, split, tag each sentence, lemmatize. Immutable and thread-safe.
class Analyzer {
 public:
  Analyzer(std::shared_ptr<const Lemmatizer> lemmatizer,
           std::shared_ptr<const PerceptronTagger> tagger);

  // Bundled lemma tables and tagger weights.
  static const Analyzer& default_instance();

  // Throws Error(kEmptyText) for blank text.
  Analysis analyze(std::string_view text) const;

  // Lowercased lemmas of the word tokens, for corpus cleaning. Blank text
  // gives an empty list instead of an error.
  std::vector<std::string> lemmas(std::string_view text) const;

  const Lemmatizer& lemmatizer() const { return *lemmatizer_; }
  const PerceptronTagger& tagger() const { return *tagger_; }

 private:
  std::shared_ptr<const Lemmatizer> lemmatizer_;
  std::shared_ptr<const PerceptronTagger> tagger_;
};

}  // namespace reqlint::text
