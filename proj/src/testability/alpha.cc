#include "reqlint/testability/alpha.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "reqlint/common/csv.h"
#include "reqlint/common/error.h"
#include "reqlint/common/strings.h"

namespace reqlint::testability {
namespace {

constexpr std::array<std::string_view, 4> kCriticality = {"NonCritical", "BusinessCritical", "MissionCritical",
                                                         "SafetyCritical"};
constexpr std::array<std::string_view, 3> kReqType = {"NonFunctional", "Functional", "Business"};
constexpr std::array<std::string_view, 2> kTemplate = {"MultipleSentences", "SingleSentence"};

// Matches the full name or its first word ("Safety" for "SafetyCritical").
template <typename E, std::size_t N>
std::optional<E> parse_enum(const std::array<std::string_view, N>& names, std::string_view s,
                            std::string_view suffix) {
  const auto t = trim(s);
  for (std::size_t i = 0; i < N; ++i) {
    const auto full = names[i];
    if (iequals(t, full)) return static_cast<E>(i);
    if (!suffix.empty() && full.size() > suffix.size() && full.substr(full.size() - suffix.size()) == suffix &&
        iequals(t, full.substr(0, full.size() - suffix.size()))) {
      return static_cast<E>(i);
    }
  }
  return std::nullopt;
}

double parse_number(const std::string& s, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::kFormatError, "bad number '" + s + "'", line);
  }
  return v;
}

void check_unit(double v, std::size_t line) {
  if (v < 0 || v > 1) throw Error(ErrorCode::kFormatError, "value outside [0, 1]", line);
}

}  // namespace

std::string_view criticality_name(Criticality c) { return kCriticality[static_cast<int>(c)]; }
std::string_view requirement_type_name(RequirementType t) { return kReqType[static_cast<int>(t)]; }
std::string_view template_name(Template t) { return kTemplate[static_cast<int>(t)]; }
std::string_view policy_name(AlphaPolicy p) { return p == AlphaPolicy::kSoftened ? "softened" : "hardened"; }

std::optional<Criticality> parse_criticality(std::string_view s) {
  return parse_enum<Criticality>(kCriticality, s, "Critical");
}
std::optional<RequirementType> parse_requirement_type(std::string_view s) {
  return parse_enum<RequirementType>(kReqType, s, "");
}
std::optional<Template> parse_template(std::string_view s) {
  if (auto t = parse_enum<Template>(kTemplate, s, "Sentences")) return t;
  return parse_enum<Template>(kTemplate, s, "Sentence");
}
std::optional<AlphaPolicy> parse_policy(std::string_view s) {
  if (iequals(trim(s), "softened")) return AlphaPolicy::kSoftened;
  if (iequals(trim(s), "hardened")) return AlphaPolicy::kHardened;
  return std::nullopt;
}

AlphaConfig AlphaConfig::parse(std::string_view content) {
  AlphaConfig cfg;
  std::array<bool, 4> seen_crit{};
  std::array<bool, 3> seen_type{};
  std::array<bool, 2> seen_templ{};
  std::size_t line_no = 0;
  for (const auto& raw : split(content, '\n')) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream in{std::string(line)};
    std::string kind;
    in >> kind;
    if (kind == "aspect") {
      std::string aspect, level, soft, hard, extra;
      in >> aspect >> level >> soft >> hard;
      if (hard.empty() || (in >> extra)) throw Error(ErrorCode::kFormatError, "expected aspect <kind> <level> <softened> <hardened>", line_no);
      const AspectRange range{parse_number(soft, line_no), parse_number(hard, line_no)};
      check_unit(range.softened, line_no);
      check_unit(range.hardened, line_no);
      if (range.hardened < range.softened) throw Error(ErrorCode::kFormatError, "hardened below softened", line_no);
      bool ok = false;
      if (aspect == "criticality") {
        if (auto c = parse_criticality(level)) {
          cfg.criticality_[static_cast<int>(*c)] = range;
          seen_crit[static_cast<int>(*c)] = ok = true;
        }
      } else if (aspect == "req_type") {
        if (auto t = parse_requirement_type(level)) {
          cfg.req_type_[static_cast<int>(*t)] = range;
          seen_type[static_cast<int>(*t)] = ok = true;
        }
      } else if (aspect == "template") {
        if (auto t = parse_template(level)) {
          cfg.template_[static_cast<int>(*t)] = range;
          seen_templ[static_cast<int>(*t)] = ok = true;
        }
      }
      if (!ok) throw Error(ErrorCode::kFormatError, "unknown aspect '" + aspect + " " + level + "'", line_no);
    } else if (kind == "domain") {
      std::string code, value;
      in >> code >> value;
      if (value.empty()) throw Error(ErrorCode::kFormatError, "expected domain <code> <value> [name]", line_no);
      const double v = parse_number(value, line_no);
      check_unit(v, line_no);
      std::string title;
      std::getline(in, title);
      if (!cfg.domains_.emplace(code, v).second) throw Error(ErrorCode::kDuplicateKey, "duplicate domain " + code, line_no);
      cfg.titles_[code] = std::string(trim(title));
    } else {
      throw Error(ErrorCode::kFormatError, "unknown entry '" + kind + "'", line_no);
    }
  }
  const auto all = [](const auto& seen) { return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }); };
  if (!all(seen_crit) || !all(seen_type) || !all(seen_templ)) {
    throw Error(ErrorCode::kFormatError, "alpha config is missing aspect levels");
  }
  return cfg;
}

AlphaConfig AlphaConfig::load(const std::filesystem::path& path) { return parse(read_file(path)); }

const AlphaConfig& AlphaConfig::default_config() {
  static const AlphaConfig cfg = load(resource_path("alpha_config"));
  return cfg;
}

double AlphaConfig::domain(std::string_view code) const {
  auto it = domains_.find(code);
  if (it == domains_.end()) raise(ErrorCode::kUnknownDomainCode, "unknown domain '" + std::string(code) + "'");
  return it->second;
}

bool AlphaConfig::has_domain(std::string_view code) const { return domains_.find(code) != domains_.end(); }

std::string AlphaConfig::domain_title(std::string_view code) const {
  auto it = titles_.find(code);
  return it == titles_.end() ? std::string() : it->second;
}

AlphaBreakdown alpha_breakdown(const AlphaProfile& profile, const AlphaConfig& config) {
  if (profile.domains.empty()) raise(ErrorCode::kInvalidArgs, "profile has no domains");
  double sum = 0;
  for (const auto& d : profile.domains) {
    if (d.normalized_dissimilarity) {
      const double v = *d.normalized_dissimilarity;
      if (!(v >= 0 && v <= 1)) raise(ErrorCode::kInvalidArgs, "custom domain '" + d.code + "' outside [0, 1]");
      sum += v;
    } else {
      sum += config.domain(d.code);
    }
  }
  AlphaBreakdown b;
  b.domain = sum / static_cast<double>(profile.domains.size());
  b.criticality = config.criticality(profile.criticality).value(profile.policy);
  b.req_type = config.req_type(profile.req_type).value(profile.policy);
  b.templ = config.templ(profile.templ).value(profile.policy);
  b.alpha = (b.domain + b.criticality + b.req_type + b.templ) / 4.0;
  return b;
}

double compute_alpha(const AlphaProfile& profile, const AlphaConfig& config) {
  return alpha_breakdown(profile, config).alpha;
}

double domain_dissimilarity(const DomainStats& s) {
  if (s.vocabulary == 0 || s.vocabulary > s.words) {
    raise(ErrorCode::kInvalidStats, "domain " + s.code + ": need 0 < vocabulary <= words");
  }
  if (!(s.avg_sim >= -1 && s.avg_sim <= 1)) raise(ErrorCode::kInvalidStats, "domain " + s.code + ": avg_sim outside [-1, 1]");
  return (1.0 - s.avg_sim) * static_cast<double>(s.vocabulary) / static_cast<double>(s.words);
}

std::map<std::string, double> normalize_dissimilarities(const std::map<std::string, double>& values) {
  if (values.size() < 2) raise(ErrorCode::kInvalidArgs, "need at least two domains to normalize");
  double lo = values.begin()->second, hi = lo;
  for (const auto& [_, v] : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(hi > lo)) raise(ErrorCode::kDegenerateRange, "all dissimilarities are equal");
  std::map<std::string, double> out;
  for (const auto& [k, v] : values) out[k] = (v - lo) / (hi - lo);
  return out;
}

std::map<std::string, AlphaProfile> parse_project_profiles(std::string_view content) {
  const auto records = csv::parse(content, '#');
  std::map<std::string, AlphaProfile> out;
  if (records.empty()) return out;
  const std::vector<std::string> expected = {"project", "domains", "criticality", "req_type", "template"};
  const auto& header = records.front();
  if (header.fields.size() != expected.size()) throw Error(ErrorCode::kFormatError, "expected header project,domains,criticality,req_type,template", header.line);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!iequals(trim(header.fields[i]), expected[i])) {
      throw Error(ErrorCode::kFormatError, "expected column '" + expected[i] + "'", header.line);
    }
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r].fields;
    const auto line = records[r].line;
    if (f.size() != expected.size()) throw Error(ErrorCode::kFormatError, "expected 5 fields", line);
    AlphaProfile p;
    for (const auto& code : split(f[1], '+')) {
      const auto c = trim(code);
      if (!c.empty()) p.domains.push_back({std::string(c), std::nullopt});
    }
    if (p.domains.empty()) throw Error(ErrorCode::kFormatError, "no domains", line);
    const auto crit = parse_criticality(f[2]);
    const auto type = parse_requirement_type(f[3]);
    const auto templ = parse_template(f[4]);
    if (!crit || !type || !templ) throw Error(ErrorCode::kFormatError, "unknown aspect level", line);
    p.criticality = *crit;
    p.req_type = *type;
    p.templ = *templ;
    const std::string name(trim(f[0]));
    if (name.empty()) throw Error(ErrorCode::kFormatError, "empty project name", line);
    if (!out.emplace(name, p).second) throw Error(ErrorCode::kDuplicateKey, "duplicate project " + name, line);
  }
  return out;
}

}  // namespace reqlint::testability
