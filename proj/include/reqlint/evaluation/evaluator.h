#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reqlint/evaluation/ground_truth.h"
#include "reqlint/evaluation/metrics.h"
#include "reqlint/evaluation/regression_tree.h"
#include "reqlint/evaluation/spearman.h"
#include "reqlint/testability/alpha.h"

namespace reqlint::evaluation {

struct SmellRow {
  smells::SmellType smell;
  ConfusionCounts counts;
  PrfScores scores;
};

// Scores of one requirement under one policy.
struct ScorePair {
  double truth = 0;
  double predicted = 0;
};

struct RequirementEvaluation {
  std::size_t index = 0;  // position in the dataset
  std::string project;
  double truth_clarity = 1;
  double predicted_clarity = 1;
  ScorePair softened;
  ScorePair hardened;
  std::size_t sentence_count = 1;
  SmellConfusion confusion;
  std::vector<smells::SmellFinding> findings;
};

struct ErrorRow {
  std::string project;  // "overall" for the whole dataset
  std::size_t requirements = 0;
  ErrorMetrics softened;
  ErrorMetrics hardened;
};

struct EvaluationReport {
  std::array<SmellRow, 9> smells;
  // Arithmetic mean of the nine rows' P/R/F1, degenerate rows included as 0.
  PrfScores average;
  // P/R/F1 of the pooled counts.
  ConfusionCounts pooled;
  PrfScores pooled_scores;
  std::vector<ErrorRow> errors;  // one per project, then "overall"
  // Ground-truth against predicted softened testability; absent when
  // undefined (fewer than 3 records or constant scores).
  std::optional<SpearmanResult> spearman;
  std::string spearman_note;
  // Smell counts of the annotations against ground-truth hardened
  // testability (the lower bound); absent below 10 records.
  std::optional<TreeSummary> tree;
  std::vector<RequirementEvaluation> requirements;
};

struct EvaluationOptions {
  std::size_t permutations = 10000;
  std::uint64_t seed = kPermutationSeed;
  int tree_depth = 3;
  unsigned threads = 0;  // 0 picks hardware concurrency
};

// Detects smells on every record, scores annotations and detections with
// the record's project profile under both policies, and aggregates.
// Throws Error(kEmptyDataset) and Error(kMissingProfile).
EvaluationReport evaluate_project(const std::vector<GroundTruthRecord>& dataset, const smells::SmellLexicon& lexicon,
                                  const smells::PosSmellMap& pos_map,
                                  const std::map<std::string, testability::AlphaProfile>& profiles,
                                  const testability::AlphaConfig& config = testability::AlphaConfig::default_config(),
                                  const EvaluationOptions& options = {});

// P/R/F1 rows and averages from per-smell counts.
void fill_smell_rows(EvaluationReport& report, const SmellConfusion& totals);

}  // namespace reqlint::evaluation
