#include "reqlint/evaluation/ground_truth.h"

#include <algorithm>
#include <map>

#include "reqlint/common/error.h"
#include "reqlint/common/strings.h"

namespace reqlint::evaluation {

using smells::kAllSmells;
using smells::smell_code;

std::vector<testability::AnnotatedTerm> GroundTruthRecord::annotated() const {
  std::vector<testability::AnnotatedTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (const auto& t : terms[i]) out.push_back({kAllSmells[i], t});
  }
  return out;
}

bool GroundTruthRecord::clean() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& v) { return v.empty(); });
}

void validate_record(const GroundTruthRecord& record) {
  for (std::size_t i = 0; i < record.terms.size(); ++i) {
    for (const auto& t : record.terms[i]) {
      const std::string where = std::string(smell_code(kAllSmells[i])) + " term '" + t + "'";
      if (trim(t).empty()) raise(ErrorCode::kInvalidTerm, std::string(smell_code(kAllSmells[i])) + " term is blank");
      if (t.find('*') != std::string::npos) raise(ErrorCode::kInvalidTerm, where + " contains '*'");
      if (!icontains(record.text, t)) raise(ErrorCode::kInvalidTerm, where + " does not occur in the text");
    }
  }
}

SmellConfusion match_terms(const SmellTerms& predicted, const SmellTerms& truth) {
  SmellConfusion out;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    std::map<std::string, std::size_t> open;
    for (const auto& t : truth[i]) ++open[to_lower(trim(t))];
    for (const auto& p : predicted[i]) {
      auto it = open.find(to_lower(trim(p)));
      if (it != open.end() && it->second > 0) {
        --it->second;
        ++out[i].tp;
      } else {
        ++out[i].fp;
      }
    }
    for (const auto& [term, left] : open) out[i].fn += left;
  }
  return out;
}

SmellTerms finding_terms(const std::vector<smells::SmellFinding>& findings) {
  SmellTerms out;
  for (const auto& f : findings) out[smells::smell_index(f.smell)].push_back(f.matched_text);
  return out;
}

SmellConfusion match_findings(const std::vector<smells::SmellFinding>& predicted, const GroundTruthRecord& truth) {
  return match_terms(finding_terms(predicted), truth.terms);
}

std::array<double, 9> smell_counts(const SmellTerms& terms) {
  std::array<double, 9> out{};
  for (std::size_t i = 0; i < terms.size(); ++i) out[i] = static_cast<double>(terms[i].size());
  return out;
}

}  // namespace reqlint::evaluation
