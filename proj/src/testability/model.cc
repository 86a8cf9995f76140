#include "reqlint/testability/model.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "reqlint/common/error.h"

namespace reqlint::testability {

double clarity(const ClarityInput& in) {
  const auto fail = [&](const char* why) {
    raise(ErrorCode::kInvalidCounts, std::string(why) + " (words " + std::to_string(in.word_count) + ", smelly " +
                                         std::to_string(in.smelly_count) + ", types " +
                                         std::to_string(in.distinct_smell_types) + ")");
  };
  if (in.word_count == 0) fail("word count must be positive");
  if (in.smelly_count > in.word_count) fail("more smelly words than words");
  if ((in.distinct_smell_types == 0) != (in.smelly_count == 0)) fail("smell types and smelly words disagree");
  if (in.distinct_smell_types > std::min<std::size_t>(9, in.smelly_count)) fail("too many smell types");
  if (in.smelly_count == 0) return 1.0;
  const double ratio = static_cast<double>(in.smelly_count) / static_cast<double>(in.word_count);
  return 1.0 - std::pow(ratio, 1.0 / static_cast<double>(in.distinct_smell_types));
}

double testability(double clarity, double alpha, std::size_t sentence_count) {
  if (!(clarity >= 0 && clarity <= 1)) raise(ErrorCode::kInvalidArgs, "clarity outside [0, 1]");
  if (!(alpha >= 0 && alpha <= 1)) raise(ErrorCode::kInvalidArgs, "alpha outside [0, 1]");
  if (sentence_count == 0) raise(ErrorCode::kInvalidArgs, "sentence count must be at least 1");
  return clarity / std::pow(1.0 + alpha, static_cast<double>(sentence_count - 1));
}

}  // namespace reqlint::testability
