#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace reqlint::smells {

enum class SmellType {
  kSubjectiveLanguage = 1,
  kAmbiguousAdvAdj = 2,
  kNonVerifiableTerm = 3,
  kSuperlative = 4,
  kComparative = 5,
  kNegativeStatement = 6,
  kVaguePronoun = 7,
  kUncertainVerb = 8,
  kPolysemy = 9,
};

inline constexpr std::array<SmellType, 9> kAllSmells = {
    SmellType::kSubjectiveLanguage, SmellType::kAmbiguousAdvAdj, SmellType::kNonVerifiableTerm,
    SmellType::kSuperlative,        SmellType::kComparative,     SmellType::kNegativeStatement,
    SmellType::kVaguePronoun,       SmellType::kUncertainVerb,   SmellType::kPolysemy};

// 0-based position in kAllSmells.
inline constexpr int smell_index(SmellType s) { return static_cast<int>(s) - 1; }

std::string_view smell_code(SmellType s);    // "S1".."S9"
std::string_view smell_name(SmellType s);    // "SubjectiveLanguage", ...
std::string_view smell_column(SmellType s);  // dataset header, "subjective_language", ...
std::string_view smell_definition(SmellType s);

// Accepts "S1".."S9" (any case) and the names above.
std::optional<SmellType> parse_smell(std::string_view text);

// Smells a dictionary may carry; the rest come from tags or the modal list.
inline constexpr bool is_lexicon_smell(SmellType s) {
  return s == SmellType::kSubjectiveLanguage || s == SmellType::kAmbiguousAdvAdj ||
         s == SmellType::kNonVerifiableTerm || s == SmellType::kPolysemy;
}

enum class DetectionSource { kPosRule, kModalList, kLexicon };

std::string_view source_name(DetectionSource s);  // "pos_rule", "modal_list", "lexicon"

}  // namespace reqlint::smells
