#include "reqlint/text/lemmatizer.h"

#include <mutex>
#include <utility>

#include "reqlint/common/error.h"
#include "reqlint/common/strings.h"

namespace reqlint::text {
namespace {

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

constexpr Rule kNounRules[] = {{"s", ""},     {"ses", "s"},   {"xes", "x"}, {"zes", "z"},
                               {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"}};
constexpr Rule kVerbRules[] = {{"s", ""},  {"ies", "y"}, {"es", "e"},  {"es", ""},
                               {"ed", "e"}, {"ed", ""},   {"ing", "e"}, {"ing", ""}};
constexpr Rule kAdjRules[] = {{"er", ""},  {"est", ""},  {"er", "e"},
                              {"est", "e"}, {"ier", "y"}, {"iest", "y"}};

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Splits tab-separated lines, skipping blanks and '#' comments.
template <typename F>
void for_each_row(std::string_view text, F&& fn) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::string_view cols[3];
    std::size_t n = 0;
    std::size_t start = 0;
    while (n < 3) {
      const std::size_t tab = line.find('\t', start);
      cols[n++] = line.substr(start, tab == std::string_view::npos ? tab : tab - start);
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    fn(cols, n);
  }
}

int class_of(std::string_view pos) {
  if (pos == "noun") return 0;
  if (pos == "verb") return 1;
  if (pos == "adj") return 2;
  if (pos == "adv") return 3;
  return -1;
}

std::string normalize_apostrophe(std::string word) {
  const std::string_view curly = "\xE2\x80\x99";
  for (std::size_t p = word.find(curly); p != std::string::npos; p = word.find(curly, p)) {
    word.replace(p, curly.size(), "'");
  }
  return word;
}

}  // namespace

Lemmatizer::Lemmatizer(std::string_view index, std::string_view exceptions) {
  for_each_row(index, [&](const std::string_view* cols, std::size_t n) {
    const int cls = class_of(cols[0]);
    if (n >= 2 && cls >= 0) index_[cls].insert(to_lower(cols[1]));
  });
  for_each_row(exceptions, [&](const std::string_view* cols, std::size_t n) {
    const int cls = class_of(cols[0]);
    if (n >= 3 && cls >= 0) exceptions_[cls].emplace(to_lower(cols[1]), to_lower(cols[2]));
  });
}

std::shared_ptr<const Lemmatizer> Lemmatizer::load(const std::filesystem::path& dir) {
  return std::make_shared<const Lemmatizer>(read_file(dir / "index.tsv"),
                                            read_file(dir / "exceptions.tsv"));
}

std::shared_ptr<const Lemmatizer> Lemmatizer::default_instance() {
  static const std::shared_ptr<const Lemmatizer> instance = load(resource_path("lemma"));
  return instance;
}

bool Lemmatizer::known(const std::string& word, Class cls) const {
  return index_[cls].count(word) > 0;
}

bool Lemmatizer::is_base_form(std::string_view word) const {
  const std::string w = to_lower(word);
  for (int c = 0; c < kClassCount; ++c) {
    if (known(w, static_cast<Class>(c))) return true;
  }
  return false;
}

std::string Lemmatizer::inflected(const std::string& word, Class cls) const {
  // Like morphy, collect every valid analysis and keep the shortest: the
  // index lists some plurals as nouns of their own ("values", "men").
  std::string best;
  const auto offer = [&](std::string candidate) {
    if (best.empty() || candidate.size() < best.size()) best = std::move(candidate);
  };
  if (auto it = exceptions_[cls].find(word); it != exceptions_[cls].end()) offer(it->second);

  const Rule* begin = nullptr;
  const Rule* end = nullptr;
  switch (cls) {
    case kNoun: begin = std::begin(kNounRules); end = std::end(kNounRules); break;
    case kVerb: begin = std::begin(kVerbRules); end = std::end(kVerbRules); break;
    case kAdj: begin = std::begin(kAdjRules); end = std::end(kAdjRules); break;
    default: return best;
  }
  for (const Rule* r = begin; r != end; ++r) {
    if (!ends_with(word, r->suffix)) continue;
    const std::string stem = word.substr(0, word.size() - r->suffix.size());
    std::string candidate = stem + std::string(r->replacement);
    if (candidate.size() < 2) continue;  // "is" is not a plural of "i"
    if (known(candidate, cls)) {
      offer(std::move(candidate));
      continue;
    }
    // stopped -> stop, bigger -> big
    const std::size_t n = stem.size();
    if (r->replacement.empty() && n >= 3 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1])) {
      candidate = stem.substr(0, n - 1);
      if (known(candidate, cls)) offer(std::move(candidate));
    }
  }
  return best;
}

std::string Lemmatizer::step_single(const std::string& word, std::string_view tag) const {
  if (word == "n't") return "not";
  if (word == "'ll") return "will";
  if (word == "'ve") return "have";
  if (word == "'m" || word == "'re") return "be";
  if (word == "'d") return tag == "VBD" ? "have" : "would";
  if (word == "'s") return tag == "VBZ" ? "be" : "'s";
  if (tag == "MD") {
    if (word == "ca") return "can";
    if (word == "wo") return "will";
    if (word == "sha") return "shall";
    return word;
  }

  if (tag.empty()) {
    for (int c = 0; c < kClassCount; ++c) {
      const auto cls = static_cast<Class>(c);
      std::string r = inflected(word, cls);
      if (!r.empty()) return r.size() <= word.size() || !known(word, cls) ? r : word;
      if (known(word, cls)) return word;
    }
    return word;
  }

  Class cls;
  if (tag == "NN" || tag == "NNS") {
    cls = kNoun;
  } else if (tag.substr(0, 2) == "VB") {
    cls = kVerb;
  } else if (tag.substr(0, 2) == "JJ") {
    cls = kAdj;
  } else if (tag == "RB" || tag == "RBR" || tag == "RBS") {
    cls = kAdv;
  } else {
    return word;  // proper nouns and closed classes
  }
  const bool base_tag = tag == "NN" || tag == "VB" || tag == "VBP" || tag == "JJ" || tag == "RB";
  if (base_tag && known(word, cls)) return word;
  std::string r = inflected(word, cls);
  return r.empty() ? word : r;
}

std::string Lemmatizer::step_hyphenated(const std::string& word, std::string_view tag) const {
  const std::size_t dash = word.rfind('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == word.size() || is_base_form(word)) {
    return step_single(word, tag);
  }
  return word.substr(0, dash + 1) + step_single(word.substr(dash + 1), tag);
}

std::string Lemmatizer::step(const std::string& word, std::string_view tag) const {
  return step_hyphenated(word, tag);
}

std::string Lemmatizer::lemmatize(std::string_view word, std::string_view tag) const {
  std::string current = normalize_apostrophe(to_lower(word));
  // Iterate to a fixed point so the function is idempotent by construction.
  for (int i = 0; i < 8; ++i) {
    std::string next = step(current, tag);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

}  // namespace reqlint::text
