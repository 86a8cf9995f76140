#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "reqlint/service/store.h"

namespace reqlint::service {

using nlohmann::json;

// Finding with byte offsets and code point offsets into `text`.
json finding_json(const smells::SmellFinding& f, std::string_view text);
smells::SmellFinding finding_from_json(const json& j);

// {"domains": ["EE", {"code": "X", "dissimilarity": 0.4}], "criticality": ...}
json profile_json(const testability::AlphaProfile& p);
// Throws Error(kInvalidArgs) for unknown aspect names or malformed fields.
testability::AlphaProfile profile_from_json(const json& j);

// {"S1": [...], ...} with every code present.
json labels_json(const evaluation::SmellTerms& labels);
// Keys are smell codes or names; missing keys mean no terms. Throws
// Error(kUnknownSmellCode) or Error(kInvalidArgs).
evaluation::SmellTerms labels_from_json(const json& j);

json scores_json(const StoredScores& s);
StoredScores scores_from_json(const json& j);

json project_json(const Project& p);
Project project_from_json(const json& j);
json requirement_json(const StoredRequirement& r);
StoredRequirement requirement_from_json(const json& j);
json audit_json(const AuditEntry& e);
AuditEntry audit_from_json(const json& j);

// Result of analyzing one text under both policies.
struct Analysis {
  std::string text;
  testability::TestabilityResult softened;
  testability::TestabilityResult hardened;
};

// Findings, clarity, alpha and testability for both policies, counts.
json analysis_json(const Analysis& a);
// Plain text rendering for terminals.
std::string analysis_table(const Analysis& a);

}  // namespace reqlint::service
