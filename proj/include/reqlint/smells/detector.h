#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/smells/lexicon.h"
#include "reqlint/smells/pos_smell_map.h"
#include "reqlint/smells/smell_type.h"
#include "reqlint/text/pipeline.h"
#include "reqlint/text/token.h"

namespace reqlint::smells {

struct SmellFinding {
  text::CharSpan span;       // byte offsets into the requirement text
  std::string matched_text;  // text at span
  std::string lemma_key;     // lexicon term, or the cue lemma for tag rules
  SmellType smell;
  DetectionSource source;
  std::size_t first_token = 0;  // covered tokens [first_token, last_token)
  std::size_t last_token = 0;

  friend bool operator==(const SmellFinding&, const SmellFinding&) = default;
};

// Each word is checked against the tag rules first; only words no rule
// claims are matched against the lexicon, greedily taking the longest key
// that starts at the word. A token belongs to at most one finding. Findings
// come back ordered by span start.
std::vector<SmellFinding> detect_smells(const text::Analysis& analysis, const SmellLexicon& lexicon,
                                        const PosSmellMap& pos_map);

// Analyzes with the default analyzer. Throws Error(kEmptyText) for blank text.
std::vector<SmellFinding> detect_smells(std::string_view text, const SmellLexicon& lexicon,
                                        const PosSmellMap& pos_map);

// Word tokens covered by findings: n(w_R^S).
std::size_t smelly_word_count(const text::Analysis& analysis, const std::vector<SmellFinding>& findings);

// Number of distinct smell types among findings: t.
std::size_t distinct_smell_types(const std::vector<SmellFinding>& findings);

}  // namespace reqlint::smells
