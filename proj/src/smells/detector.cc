#include "reqlint/smells/detector.h"

#include <optional>
#include <set>

#include "reqlint/common/strings.h"

namespace reqlint::smells {

std::vector<SmellFinding> detect_smells(const text::Analysis& a, const SmellLexicon& lexicon,
                                        const PosSmellMap& pos_map) {
  const auto& tokens = a.tokens;
  std::vector<std::optional<PosRuleHit>> hits(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) hits[i] = pos_map.rule_for(a, i);

  const auto make = [&](std::size_t first, std::size_t last, std::string key, SmellType smell,
                        DetectionSource source) {
    SmellFinding f;
    f.span = {tokens[first].span.begin, tokens[last - 1].span.end};
    f.matched_text = std::string(f.span.slice(a.text));
    f.lemma_key = std::move(key);
    f.smell = smell;
    f.source = source;
    f.first_token = first;
    f.last_token = last;
    return f;
  };

  std::vector<SmellFinding> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!tokens[i].is_word) {
      ++i;
      continue;
    }
    if (hits[i]) {
      out.push_back(make(i, i + 1, tokens[i].lemma, hits[i]->smell, hits[i]->source));
      ++i;
      continue;
    }
    const auto m = lexicon.longest_match(tokens, i, [&](std::size_t k) { return hits[k].has_value(); });
    if (m) {
      out.push_back(make(m->first, m->last, m->entry->term, m->entry->smell, DetectionSource::kLexicon));
      i = m->last;
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<SmellFinding> detect_smells(std::string_view text, const SmellLexicon& lexicon,
                                        const PosSmellMap& pos_map) {
  return detect_smells(text::Analyzer::default_instance().analyze(text), lexicon, pos_map);
}

std::size_t smelly_word_count(const text::Analysis& a, const std::vector<SmellFinding>& findings) {
  std::size_t n = 0;
  for (const auto& f : findings) {
    for (std::size_t k = f.first_token; k < f.last_token && k < a.tokens.size(); ++k) n += a.tokens[k].is_word;
  }
  return n;
}

std::size_t distinct_smell_types(const std::vector<SmellFinding>& findings) {
  std::set<SmellType> types;
  for (const auto& f : findings) types.insert(f.smell);
  return types.size();
}

}  // namespace reqlint::smells
