#include "reqlint/testability/scorer.h"

#include <set>

#include "reqlint/text/tokenizer.h"

namespace reqlint::testability {

TestabilityResult score_requirement(std::string_view text, const smells::SmellLexicon& lexicon,
                                    const smells::PosSmellMap& pos_map, const AlphaProfile& profile,
                                    const AlphaConfig& config) {
  const auto analysis = text::Analyzer::default_instance().analyze(text);
  const double alpha = compute_alpha(profile, config);
  return score_findings(analysis, smells::detect_smells(analysis, lexicon, pos_map), alpha);
}

TestabilityResult score_findings(const text::Analysis& analysis, std::vector<smells::SmellFinding> findings,
                                 double alpha) {
  TestabilityResult r;
  r.word_count = analysis.word_count();
  r.sentence_count = analysis.sentence_count();
  r.smelly_count = smells::smelly_word_count(analysis, findings);
  r.distinct_smell_types = smells::distinct_smell_types(findings);
  r.alpha = alpha;
  r.clarity = clarity({r.word_count, r.smelly_count, r.distinct_smell_types});
  r.testability = testability(r.clarity, alpha, r.sentence_count);
  r.findings = std::move(findings);
  return r;
}

ClarityInput annotated_counts(const text::Analysis& analysis, const std::vector<AnnotatedTerm>& terms) {
  ClarityInput in;
  in.word_count = analysis.word_count();
  std::set<smells::SmellType> types;
  for (const auto& t : terms) {
    std::size_t words = 0;
    for (const auto& tok : text::tokenize(t.term)) words += tok.is_word;
    if (words == 0) continue;
    in.smelly_count += words;
    types.insert(t.smell);
  }
  in.distinct_smell_types = types.size();
  return in;
}

TestabilityResult score_annotated(const text::Analysis& analysis, const std::vector<AnnotatedTerm>& terms,
                                  double alpha) {
  const auto in = annotated_counts(analysis, terms);
  TestabilityResult r;
  r.word_count = in.word_count;
  r.smelly_count = in.smelly_count;
  r.distinct_smell_types = in.distinct_smell_types;
  r.sentence_count = analysis.sentence_count();
  r.alpha = alpha;
  r.clarity = clarity(in);
  r.testability = testability(r.clarity, alpha, r.sentence_count);
  return r;
}

}  // namespace reqlint::testability
