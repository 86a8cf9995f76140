#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reqlint::testability {

enum class Criticality { kNonCritical, kBusinessCritical, kMissionCritical, kSafetyCritical };
enum class RequirementType { kNonFunctional, kFunctional, kBusiness };
enum class Template { kMultipleSentences, kSingleSentence };
enum class AlphaPolicy { kSoftened, kHardened };

std::string_view criticality_name(Criticality c);  // "SafetyCritical", ...
std::string_view requirement_type_name(RequirementType t);
std::string_view template_name(Template t);
std::string_view policy_name(AlphaPolicy p);  // "softened", "hardened"

// Case-insensitive; also accept the short forms "Safety", "Non", "Multiple"...
std::optional<Criticality> parse_criticality(std::string_view s);
std::optional<RequirementType> parse_requirement_type(std::string_view s);
std::optional<Template> parse_template(std::string_view s);
std::optional<AlphaPolicy> parse_policy(std::string_view s);

struct AspectRange {
  double softened = 0;
  double hardened = 0;

  double value(AlphaPolicy p) const { return p == AlphaPolicy::kSoftened ? softened : hardened; }
};

// A domain given by code (looked up in the config) or with an explicit
// normalized dissimilarity.
struct DomainRef {
  std::string code;
  std::optional<double> normalized_dissimilarity;
};

struct AlphaProfile {
  std::vector<DomainRef> domains;
  Criticality criticality = Criticality::kNonCritical;
  RequirementType req_type = RequirementType::kFunctional;
  Template templ = Template::kSingleSentence;
  AlphaPolicy policy = AlphaPolicy::kSoftened;

  AlphaProfile with_policy(AlphaPolicy p) const {
    AlphaProfile copy = *this;
    copy.policy = p;
    return copy;
  }
};

// Aspect intervals and built-in domain values. Parsed from the alpha_config
// table format (see data/alpha_config).
class AlphaConfig {
 public:
  static AlphaConfig parse(std::string_view content);  // Error(kFormatError) with line
  static AlphaConfig load(const std::filesystem::path& path);
  static const AlphaConfig& default_config();

  const AspectRange& criticality(Criticality c) const { return criticality_[static_cast<int>(c)]; }
  const AspectRange& req_type(RequirementType t) const { return req_type_[static_cast<int>(t)]; }
  const AspectRange& templ(Template t) const { return template_[static_cast<int>(t)]; }

  // Throws Error(kUnknownDomainCode).
  double domain(std::string_view code) const;
  bool has_domain(std::string_view code) const;
  const std::map<std::string, double, std::less<>>& domains() const { return domains_; }
  std::string domain_title(std::string_view code) const;  // empty if none given

 private:
  std::array<AspectRange, 4> criticality_{};
  std::array<AspectRange, 3> req_type_{};
  std::array<AspectRange, 2> template_{};
  std::map<std::string, double, std::less<>> domains_;
  std::map<std::string, std::string, std::less<>> titles_;
};

struct AlphaBreakdown {
  double domain = 0;  // mean normalized dissimilarity of the profile's domains
  double criticality = 0;
  double req_type = 0;
  double templ = 0;
  double alpha = 0;
};

// alpha = (domain + criticality + req_type + template) / 4 under the
// profile's policy. Throws kUnknownDomainCode, or kInvalidArgs for an empty
// domain list or a custom value outside [0, 1].
AlphaBreakdown alpha_breakdown(const AlphaProfile& profile, const AlphaConfig& config = AlphaConfig::default_config());
double compute_alpha(const AlphaProfile& profile, const AlphaConfig& config = AlphaConfig::default_config());

struct DomainStats {
  std::string code;
  double avg_sim = 0;            // average similarity with computer science
  std::uint64_t vocabulary = 0;  // V(D)
  std::uint64_t words = 0;       // W(D)
};

// (1 - avg_sim) * V / W. Throws kInvalidStats unless 0 < V <= W and
// avg_sim is in [-1, 1].
double domain_dissimilarity(const DomainStats& stats);

// Affine map onto [0, 1]: min to 0, max to 1. Throws kInvalidArgs for fewer
// than two values, kDegenerateRange when all values are equal.
std::map<std::string, double> normalize_dissimilarities(const std::map<std::string, double>& values);

// Project table: CSV header project,domains,criticality,req_type,template,
// domains joined by '+'. Profiles come back softened.
std::map<std::string, AlphaProfile> parse_project_profiles(std::string_view content);

}  // namespace reqlint::testability
