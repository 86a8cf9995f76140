#pragma once

#include <cstddef>

namespace reqlint::testability {

struct ClarityInput {
  std::size_t word_count = 0;            // n(w_R)
  std::size_t smelly_count = 0;          // smelly words
  std::size_t distinct_smell_types = 0;  // t
};

// 1 for a clean requirement, else 1 - (smelly / words)^(1/t). Reaches 0
// when every word is smelly and t = 1.
// Throws Error(kInvalidCounts) unless words > 0, smelly <= words,
// t <= min(9, smelly) and (t = 0 iff smelly = 0).
double clarity(const ClarityInput& in);

// clarity / (1 + alpha)^(sentences - 1); the first sentence costs nothing.
// Throws Error(kInvalidArgs) unless clarity in [0, 1], alpha in [0, 1],
// sentences >= 1. Alpha reaches 1 only with every aspect at its maximum.
double testability(double clarity, double alpha, std::size_t sentence_count);

}  // namespace reqlint::testability
