#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "reqlint/smells/smell_type.h"
#include "reqlint/text/pipeline.h"

namespace reqlint::smells {

struct PosRuleHit {
  SmellType smell;
  DetectionSource source;
};

// Tag and cue rules for S4 to S8.
//
//   JJS, RBS                      Superlative
//   JJR, RBR; "more"/"less" + JJ  Comparative (the cue word only)
//   not n't no never neither nor  NegativeStatement
//   WDT, WP                       VaguePronoun
//   it/they/them, bare this/that/these/those
//     with no noun earlier in the same sentence    VaguePronoun
//   MD whose lemma is in the modal set             UncertainVerb
//
// "shall", "will" and "must" state obligations, so they can never be in the
// modal set.
class PosSmellMap {
 public:
  static const std::set<std::string>& default_modals();  // may might can could should

  PosSmellMap();
  // Throws Error(kInvalidArgs) if the set contains shall, will or must.
  explicit PosSmellMap(std::set<std::string> modal_set);

  static const PosSmellMap& default_map();

  const std::set<std::string>& modal_set() const { return modals_; }
  const std::map<std::string, SmellType>& tag_rules() const { return tag_rules_; }

  // Rule firing on token `i` of an analyzed text, if any.
  std::optional<PosRuleHit> rule_for(const text::Analysis& analysis, std::size_t i) const;

 private:
  std::set<std::string> modals_;
  std::map<std::string, SmellType> tag_rules_;
};

}  // namespace reqlint::smells
