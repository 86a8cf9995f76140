#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "reqlint/smells/detector.h"
#include "reqlint/smells/smell_type.h"
#include "reqlint/testability/scorer.h"

namespace reqlint::evaluation {

// Per-smell term multisets, indexed by smell_index().
using SmellTerms = std::array<std::vector<std::string>, 9>;

// One annotated requirement of a dataset.
struct GroundTruthRecord {
  std::string text;
  std::string project;
  SmellTerms terms;

  std::vector<testability::AnnotatedTerm> annotated() const;
  bool clean() const;
  friend bool operator==(const GroundTruthRecord&, const GroundTruthRecord&) = default;
};

// Throws Error(kInvalidTerm) when a term is blank, holds '*', or does not
// occur in the text (case-insensitive).
void validate_record(const GroundTruthRecord& record);

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

using SmellConfusion = std::array<ConfusionCounts, 9>;

// Multiset matching per (smell, lowercased term). Each truth term consumes
// at most one prediction and vice versa.
SmellConfusion match_terms(const SmellTerms& predicted, const SmellTerms& truth);

// Findings become terms by their matched text.
SmellTerms finding_terms(const std::vector<smells::SmellFinding>& findings);
SmellConfusion match_findings(const std::vector<smells::SmellFinding>& predicted, const GroundTruthRecord& truth);

// Smell-count feature vector of a record (terms per smell).
std::array<double, 9> smell_counts(const SmellTerms& terms);

}  // namespace reqlint::evaluation
