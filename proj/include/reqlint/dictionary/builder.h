#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/dictionary/cbow.h"
#include "reqlint/dictionary/corpus.h"
#include "reqlint/smells/lexicon.h"

namespace reqlint::dictionary {

inline constexpr double kDefaultThreshold = 0.5943;

struct DictionaryConfig {
  std::size_t n = 1000;  // frequent computer-science words to rank
  TrainerConfig trainer;
  double threshold = kDefaultThreshold;
  unsigned threads = 0;  // 0: one per hardware thread
};

struct RankedRow {
  std::string word;
  // Per-domain cosine between "w" and "_w"; empty when either is missing
  // from that domain's merged vocabulary.
  std::vector<std::optional<double>> similarity;  // parallel to RankedDictionary::domains
  double mean = 0;                                // over the available domains
  bool candidate = false;                         // mean <= threshold
  std::optional<smells::SmellType> label;

  std::size_t available() const;
};

struct RankedDictionary {
  std::vector<std::string> domains;
  std::vector<RankedRow> rows;  // ascending by mean, then word
  double threshold = kDefaultThreshold;
  std::vector<std::string> unranked;  // frequent words found in no domain

  const RankedRow* find(std::string_view word) const;
  std::size_t candidate_count() const;
};

// For every other domain d, trains one model on the computer-science
// documents merged with d's documents in which the frequent words carry a
// "_" prefix, then compares each frequent word with its prefixed twin.
// Domains train in parallel; the result does not depend on thread count.
// Throws Error(kNoOtherCorpora) or trainer errors.
RankedDictionary build_dictionary(const DomainCorpus& cs, const std::vector<DomainCorpus>& others,
                                  const DictionaryConfig& config);

// Reassembles rows from per-domain similarities (used by the builder and
// the sensitivity harness). Rows with no similarity go to `unranked`.
RankedDictionary rank_rows(std::vector<std::string> domains, std::vector<RankedRow> rows, double threshold);

// CSV: word,<domains...>,mean[,smell]. Missing similarities are empty cells.
std::string export_ranking_csv(const RankedDictionary& dict);
RankedDictionary parse_ranking_csv(std::string_view content, double threshold = kDefaultThreshold);

// Label-ready list of candidate rows: word,mean,smell (smell left empty
// unless already labeled).
std::string export_candidates_csv(const RankedDictionary& dict);

// Reads a completed candidates file (word,mean,smell) and sets labels.
// Unknown words throw Error(kInvalidTerm); S4 to S8 throw kUnknownSmellCode.
void apply_labels(RankedDictionary& dict, std::string_view candidates_csv);

// Labeled rows as an auto-built lexicon with their mean similarity.
smells::SmellLexicon to_lexicon(const RankedDictionary& dict);

// Boundary similarity when each single domain is left out of the means.
struct SensitivityRow {
  std::string excluded;     // empty for "all domains"
  double boundary = 0;      // highest mean among the smelly words
  double delta = 0;         // boundary minus the all-domain boundary
  std::size_t changed = 0;  // words whose candidate status flips at the threshold
};

// Smelly words are the labeled rows, or the candidates when nothing is
// labeled. Throws Error(kInvalidArgs) when there are none.
std::vector<SensitivityRow> threshold_sensitivity(const RankedDictionary& dict);
std::string export_sensitivity_csv(const std::vector<SensitivityRow>& rows);

}  // namespace reqlint::dictionary
