#include "reqlint/smells/pos_smell_map.h"

#include <array>
#include <string_view>

#include "reqlint/common/error.h"
#include "reqlint/common/strings.h"

namespace reqlint::smells {
namespace {

constexpr std::array<std::string_view, 6> kNegationCues = {"not", "n't", "no", "never", "neither", "nor"};
constexpr std::array<std::string_view, 3> kObligations = {"shall", "will", "must"};
constexpr std::array<std::string_view, 3> kPersonalPronouns = {"it", "they", "them"};
constexpr std::array<std::string_view, 4> kDemonstratives = {"this", "that", "these", "those"};

template <std::size_t N>
bool one_of(const std::array<std::string_view, N>& set, std::string_view word) {
  for (auto w : set) {
    if (w == word) return true;
  }
  return false;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

bool is_adjective_or_adverb(std::string_view tag) { return tag == "JJ" || tag == "RB"; }

// Index of the next word token after i, or tokens.size().
std::size_t next_word(const std::vector<text::Token>& tokens, std::size_t i) {
  for (std::size_t j = i + 1; j < tokens.size(); ++j) {
    if (tokens[j].is_word) return j;
  }
  return tokens.size();
}

bool noun_before(const text::Analysis& a, std::size_t i) {
  const auto first = a.sentences.token_ranges[a.sentence_of(i)].first;
  for (std::size_t j = first; j < i; ++j) {
    if (starts_with(a.tokens[j].tag, "NN")) return true;
  }
  return false;
}

}  // namespace

const std::set<std::string>& PosSmellMap::default_modals() {
  static const std::set<std::string> modals = {"can", "could", "may", "might", "should"};
  return modals;
}

PosSmellMap::PosSmellMap() : PosSmellMap(default_modals()) {}

PosSmellMap::PosSmellMap(std::set<std::string> modal_set) {
  for (const auto& m : modal_set) {
    const auto lower = to_lower(m);
    if (one_of(kObligations, lower)) raise(ErrorCode::kInvalidArgs, "'" + lower + "' cannot be an uncertain modal");
    modals_.insert(lower);
  }
  tag_rules_ = {
      {"JJS", SmellType::kSuperlative}, {"RBS", SmellType::kSuperlative},
      {"JJR", SmellType::kComparative}, {"RBR", SmellType::kComparative},
      {"WDT", SmellType::kVaguePronoun}, {"WP", SmellType::kVaguePronoun},
  };
}

const PosSmellMap& PosSmellMap::default_map() {
  static const PosSmellMap map;
  return map;
}

std::optional<PosRuleHit> PosSmellMap::rule_for(const text::Analysis& a, std::size_t i) const {
  const auto& tok = a.tokens[i];
  if (!tok.is_word) return std::nullopt;
  const std::string lower = to_lower(tok.surface);

  if (one_of(kNegationCues, lower) || tok.lemma == "not") {
    return PosRuleHit{SmellType::kNegativeStatement, DetectionSource::kPosRule};
  }
  if (tok.tag == "MD") {
    if (modals_.count(tok.lemma) || modals_.count(lower)) {
      return PosRuleHit{SmellType::kUncertainVerb, DetectionSource::kModalList};
    }
    return std::nullopt;
  }
  if (auto it = tag_rules_.find(tok.tag); it != tag_rules_.end()) {
    return PosRuleHit{it->second, DetectionSource::kPosRule};
  }
  if (lower == "more" || lower == "less") {
    const auto j = next_word(a.tokens, i);
    if (j < a.tokens.size() && is_adjective_or_adverb(a.tokens[j].tag)) {
      return PosRuleHit{SmellType::kComparative, DetectionSource::kPosRule};
    }
  }
  if (tok.tag == "PRP" && one_of(kPersonalPronouns, lower) && !noun_before(a, i)) {
    return PosRuleHit{SmellType::kVaguePronoun, DetectionSource::kPosRule};
  }
  if (one_of(kDemonstratives, lower) && (tok.tag == "DT" || tok.tag == "IN")) {
    const auto j = next_word(a.tokens, i);
    const bool determiner = j < a.tokens.size() && j == i + 1 &&
                            (starts_with(a.tokens[j].tag, "NN") || starts_with(a.tokens[j].tag, "JJ") ||
                             a.tokens[j].tag == "CD");
    // "that" tagged IN is a complementizer, not a pronoun.
    if (tok.tag == "DT" && !determiner && !noun_before(a, i)) {
      return PosRuleHit{SmellType::kVaguePronoun, DetectionSource::kPosRule};
    }
  }
  return std::nullopt;
}

}  // namespace reqlint::smells
