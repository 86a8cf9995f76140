#include "reqlint/smells/smell_type.h"

#include "reqlint/common/strings.h"

namespace reqlint::smells {
namespace {

struct Info {
  std::string_view code;
  std::string_view name;
  std::string_view column;
  std::string_view definition;
};

constexpr Info kInfo[] = {
    {"S1", "SubjectiveLanguage", "subjective_language",
     "Words whose semantics are not defined objectively."},
    {"S2", "AmbiguousAdvAdj", "ambiguous_adv_adj",
     "Adverbs and adjectives that are unspecified by nature."},
    {"S3", "NonVerifiableTerm", "non_verifiable_term",
     "Terms that offer a choice of possibilities or an imprecisely defined extent."},
    {"S4", "Superlative", "superlative",
     "Superlatives relating the system to all other systems."},
    {"S5", "Comparative", "comparative",
     "Comparatives relating the system to specific other systems or earlier situations."},
    {"S6", "NegativeStatement", "negative",
     "Statements of a capability the system must not provide."},
    {"S7", "VaguePronoun", "vague_pronoun",
     "Pronouns whose reference is unclear from the context."},
    {"S8", "UncertainVerb", "uncertain_verb",
     "Verbs expressing less than full certainty."},
    {"S9", "Polysemy", "polysemy",
     "Words with several meanings depending on the domain."},
};

const Info& info(SmellType s) { return kInfo[smell_index(s)]; }

}  // namespace

std::string_view smell_code(SmellType s) { return info(s).code; }
std::string_view smell_name(SmellType s) { return info(s).name; }
std::string_view smell_column(SmellType s) { return info(s).column; }
std::string_view smell_definition(SmellType s) { return info(s).definition; }

std::optional<SmellType> parse_smell(std::string_view text) {
  const auto t = trim(text);
  for (auto s : kAllSmells) {
    if (iequals(t, smell_code(s)) || t == smell_name(s)) return s;
  }
  return std::nullopt;
}

std::string_view source_name(DetectionSource s) {
  switch (s) {
    case DetectionSource::kPosRule: return "pos_rule";
    case DetectionSource::kModalList: return "modal_list";
    case DetectionSource::kLexicon: return "lexicon";
  }
  return "";
}

}  // namespace reqlint::smells
