#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/smells/detector.h"
#include "reqlint/testability/alpha.h"
#include "reqlint/testability/model.h"
#include "reqlint/text/pipeline.h"

namespace reqlint::testability {

struct TestabilityResult {
  double clarity = 1;
  double alpha = 0;
  std::size_t sentence_count = 1;
  double testability = 1;
  std::size_t word_count = 0;
  std::size_t smelly_count = 0;
  std::size_t distinct_smell_types = 0;
  std::vector<smells::SmellFinding> findings;
};

// Detects smells and scores them. Throws Error(kEmptyText) for blank text.
TestabilityResult score_requirement(std::string_view text, const smells::SmellLexicon& lexicon,
                                    const smells::PosSmellMap& pos_map, const AlphaProfile& profile,
                                    const AlphaConfig& config = AlphaConfig::default_config());

// Scores given findings: smelly words are the word tokens they cover.
TestabilityResult score_findings(const text::Analysis& analysis, std::vector<smells::SmellFinding> findings,
                                 double alpha);

// A hand-annotated smelly term ("calls", "as far as possible").
struct AnnotatedTerm {
  smells::SmellType smell;
  std::string term;

  friend bool operator==(const AnnotatedTerm&, const AnnotatedTerm&) = default;
};

// Counts for annotations: each term adds its word count, t is the number
// of smell types with at least one term.
ClarityInput annotated_counts(const text::Analysis& analysis, const std::vector<AnnotatedTerm>& terms);

// Ground-truth score of a requirement from its annotations; findings stay empty.
TestabilityResult score_annotated(const text::Analysis& analysis, const std::vector<AnnotatedTerm>& terms,
                                  double alpha);

}  // namespace reqlint::testability
