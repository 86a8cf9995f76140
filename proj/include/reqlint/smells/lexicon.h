#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/smells/smell_type.h"
#include "reqlint/text/token.h"

namespace reqlint::smells {

enum class LexiconProvenance { kAutoBuilt, kHandMade };

std::string_view provenance_name(LexiconProvenance p);  // "auto_built", "hand_made"

struct LexiconEntry {
  std::string term;  // lowercase lemmas joined by single spaces
  SmellType smell;
  std::optional<double> mean_similarity;
};

// A match of a lexicon key against tokens [first, last).
struct LexiconMatch {
  std::size_t first = 0;
  std::size_t last = 0;
  const LexiconEntry* entry = nullptr;
};

// Multi-word smelly-term dictionary (keys of 1 to 5 lemmas, smells S1, S2,
// S3 and S9 only). Immutable after construction.
//
// File format (UTF-8 CSV):
//   # provenance: hand_made          optional, default auto_built
//   term,smell,mean_similarity
//   call,S9,0.1078
//   as far as possible,S3,
class SmellLexicon {
 public:
  static constexpr std::size_t kMaxKeyLemmas = 5;

  SmellLexicon() = default;
  // Validates like parse(); errors carry no line number.
  SmellLexicon(std::vector<LexiconEntry> entries, LexiconProvenance provenance);

  // Throws Error with kFormatError (with line), kDuplicateKey or kUnknownSmellCode.
  static SmellLexicon parse(std::string_view content);
  static SmellLexicon load(const std::filesystem::path& path);
  // data/lexicon/default.csv, loaded once.
  static const SmellLexicon& default_lexicon();
  // data/lexicon/hand_made.csv, loaded once.
  static const SmellLexicon& hand_made_lexicon();

  std::string serialize() const;

  const std::vector<LexiconEntry>& entries() const { return entries_; }  // sorted by term
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  LexiconProvenance provenance() const { return provenance_; }
  // Content hash of the canonical serialization.
  const std::string& version() const { return version_; }

  const LexiconEntry* find(std::string_view term) const;

  // Longest entry starting at tokens[first]. Each word may match by its
  // lemma or by its lowercased surface; a non-word token ends the key.
  // `blocked(i)` marks tokens a match must not cover. Ties between keys of
  // equal length go to the smaller smell code, then the smaller term.
  template <typename Blocked>
  std::optional<LexiconMatch> longest_match(const std::vector<text::Token>& tokens, std::size_t first,
                                            Blocked&& blocked) const;

 private:
  struct Node {
    std::map<std::string, std::size_t, std::less<>> children;
    int entry = -1;
  };

  void index();

  std::vector<LexiconEntry> entries_;
  LexiconProvenance provenance_ = LexiconProvenance::kAutoBuilt;
  std::string version_;
  std::vector<Node> trie_;
};

// Lowercases and collapses whitespace; empty when the term is blank.
std::string normalize_term(std::string_view term);

template <typename Blocked>
std::optional<LexiconMatch> SmellLexicon::longest_match(const std::vector<text::Token>& tokens,
                                                        std::size_t first, Blocked&& blocked) const {
  if (trie_.empty()) return std::nullopt;
  std::optional<LexiconMatch> best;
  std::vector<std::size_t> frontier = {0};
  for (std::size_t i = first; i < tokens.size() && i - first < kMaxKeyLemmas && !frontier.empty(); ++i) {
    const auto& tok = tokens[i];
    if (!tok.is_word || blocked(i)) break;
    std::string surface;
    surface.reserve(tok.surface.size());
    for (char c : tok.surface) surface.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c);
    std::vector<std::size_t> next;
    for (auto node : frontier) {
      for (const std::string* key : {&tok.lemma, static_cast<const std::string*>(&surface)}) {
        auto it = trie_[node].children.find(*key);
        if (it == trie_[node].children.end()) continue;
        bool seen = false;
        for (auto n : next) seen = seen || n == it->second;
        if (!seen) next.push_back(it->second);
      }
    }
    for (auto node : next) {
      const int e = trie_[node].entry;
      if (e < 0) continue;
      const LexiconEntry* cand = &entries_[static_cast<std::size_t>(e)];
      const bool longer = !best || i + 1 > best->last;
      const bool better_tie = best && i + 1 == best->last &&
                              (smell_index(cand->smell) < smell_index(best->entry->smell) ||
                               (cand->smell == best->entry->smell && cand->term < best->entry->term));
      if (longer || better_tie) best = LexiconMatch{first, i + 1, cand};
    }
    frontier = std::move(next);
  }
  return best;
}

}  // namespace reqlint::smells
