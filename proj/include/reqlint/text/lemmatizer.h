#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "reqlint/text/token.h"

namespace reqlint::text {

// Dictionary-checked suffix stripping in the style of WordNet's morphy:
// irregular forms come from an exception table, regular ones from suffix
// rules whose output must be a known base form.
//
// With a Penn tag the word class is fixed (NN*, VB*, JJ*, RB*); other tags
// only lowercase, apart from clitics and contracted modals ("n't" -> "not",
// "ca" -> "can"). Without a tag every class is tried, noun first.
// Unknown words come back lowercased. The result is a fixed point:
// lemmatize(lemmatize(w, t), t) == lemmatize(w, t).
class Lemmatizer {
 public:
  // index: "pos\tlemma" lines; exceptions: "pos\tform\tlemma" lines.
  // pos is one of noun, verb, adj, adv; '#' lines are comments.
  Lemmatizer(std::string_view index, std::string_view exceptions);

  // Reads index.tsv and exceptions.tsv from `dir`.
  static std::shared_ptr<const Lemmatizer> load(const std::filesystem::path& dir);
  static std::shared_ptr<const Lemmatizer> default_instance();

  std::string lemmatize(std::string_view word, std::string_view tag = {}) const;
  std::string lemmatize(const Token& token) const { return lemmatize(token.surface, token.tag); }

  // True when `word` (lowercased) is a base form of any class.
  bool is_base_form(std::string_view word) const;

 private:
  enum Class { kNoun = 0, kVerb = 1, kAdj = 2, kAdv = 3, kClassCount = 4 };

  std::string step(const std::string& word, std::string_view tag) const;
  std::string step_hyphenated(const std::string& word, std::string_view tag) const;
  std::string step_single(const std::string& word, std::string_view tag) const;
  // Exception lookup then suffix rules; empty when nothing applies.
  std::string inflected(const std::string& word, Class cls) const;
  bool known(const std::string& word, Class cls) const;

  std::array<std::unordered_set<std::string>, kClassCount> index_;
  std::array<std::unordered_map<std::string, std::string>, kClassCount> exceptions_;
};

}  // namespace reqlint::text
