#include "reqlint/service/analysis_document.h"

#include <cstdio>

#include "reqlint/common/error.h"
#include "reqlint/common/strings.h"
#include "reqlint/common/utf8.h"

namespace reqlint::service {

using smells::SmellFinding;
using testability::AlphaProfile;

namespace {

smells::DetectionSource parse_source(std::string_view s) {
  for (auto src : {smells::DetectionSource::kPosRule, smells::DetectionSource::kModalList,
                   smells::DetectionSource::kLexicon}) {
    if (smells::source_name(src) == s) return src;
  }
  raise(ErrorCode::kFormatError, "unknown detection source '" + std::string(s) + "'");
}

smells::SmellType smell_of(std::string_view s) {
  const auto t = smells::parse_smell(s);
  if (!t) raise(ErrorCode::kUnknownSmellCode, "unknown smell '" + std::string(s) + "'");
  return *t;
}

template <typename T>
T aspect(const json& j, const char* key, std::optional<T> (*parse)(std::string_view), T fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_string()) raise(ErrorCode::kInvalidArgs, std::string(key) + " must be a string");
  const auto v = parse(j[key].get<std::string>());
  if (!v) raise(ErrorCode::kInvalidArgs, "unknown " + std::string(key) + " '" + j[key].get<std::string>() + "'");
  return *v;
}

}  // namespace

json finding_json(const SmellFinding& f, std::string_view text) {
  return {{"smell", smells::smell_code(f.smell)},
          {"name", smells::smell_name(f.smell)},
          {"text", f.matched_text},
          {"lemma", f.lemma_key},
          {"source", smells::source_name(f.source)},
          {"begin", f.span.begin},
          {"end", f.span.end},
          {"begin_cp", utf8::codepoint_offset(text, f.span.begin)},
          {"end_cp", utf8::codepoint_offset(text, f.span.end)},
          {"first_token", f.first_token},
          {"last_token", f.last_token}};
}

SmellFinding finding_from_json(const json& j) {
  SmellFinding f;
  f.smell = smell_of(j.at("smell").get<std::string>());
  f.matched_text = j.at("text").get<std::string>();
  f.lemma_key = j.at("lemma").get<std::string>();
  f.source = parse_source(j.at("source").get<std::string>());
  f.span = {j.at("begin").get<std::size_t>(), j.at("end").get<std::size_t>()};
  f.first_token = j.at("first_token").get<std::size_t>();
  f.last_token = j.at("last_token").get<std::size_t>();
  return f;
}

json profile_json(const AlphaProfile& p) {
  json domains = json::array();
  for (const auto& d : p.domains) {
    if (d.normalized_dissimilarity) {
      domains.push_back({{"code", d.code}, {"dissimilarity", *d.normalized_dissimilarity}});
    } else {
      domains.push_back(d.code);
    }
  }
  return {{"domains", std::move(domains)},
          {"criticality", testability::criticality_name(p.criticality)},
          {"req_type", testability::requirement_type_name(p.req_type)},
          {"template", testability::template_name(p.templ)},
          {"policy", testability::policy_name(p.policy)}};
}

AlphaProfile profile_from_json(const json& j) {
  if (!j.is_object()) raise(ErrorCode::kInvalidArgs, "profile must be an object");
  AlphaProfile p;
  if (!j.contains("domains") || !j["domains"].is_array() || j["domains"].empty()) {
    raise(ErrorCode::kInvalidArgs, "profile needs a non-empty domains array");
  }
  for (const auto& d : j["domains"]) {
    if (d.is_string()) {
      p.domains.push_back({d.get<std::string>(), std::nullopt});
    } else if (d.is_object() && d.contains("code") && d["code"].is_string()) {
      testability::DomainRef ref{d["code"].get<std::string>(), std::nullopt};
      if (d.contains("dissimilarity")) {
        if (!d["dissimilarity"].is_number()) raise(ErrorCode::kInvalidArgs, "dissimilarity must be a number");
        ref.normalized_dissimilarity = d["dissimilarity"].get<double>();
      }
      p.domains.push_back(std::move(ref));
    } else {
      raise(ErrorCode::kInvalidArgs, "domain entries are codes or {code, dissimilarity}");
    }
  }
  p.criticality = aspect(j, "criticality", &testability::parse_criticality, p.criticality);
  p.req_type = aspect(j, "req_type", &testability::parse_requirement_type, p.req_type);
  p.templ = aspect(j, "template", &testability::parse_template, p.templ);
  p.policy = aspect(j, "policy", &testability::parse_policy, p.policy);
  return p;
}

json labels_json(const evaluation::SmellTerms& labels) {
  json out = json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) out[std::string(smells::smell_code(smells::kAllSmells[i]))] = labels[i];
  return out;
}

evaluation::SmellTerms labels_from_json(const json& j) {
  if (!j.is_object()) raise(ErrorCode::kInvalidArgs, "labels must be an object keyed by smell");
  evaluation::SmellTerms out;
  for (const auto& [key, terms] : j.items()) {
    const auto smell = smell_of(key);
    if (!terms.is_array()) raise(ErrorCode::kInvalidArgs, "labels of " + key + " must be an array");
    for (const auto& t : terms) {
      if (!t.is_string()) raise(ErrorCode::kInvalidArgs, "labels of " + key + " must be strings");
      out[static_cast<std::size_t>(smells::smell_index(smell))].push_back(t.get<std::string>());
    }
  }
  return out;
}

json scores_json(const StoredScores& s) {
  return {{"clarity", s.clarity},
          {"sentence_count", s.sentence_count},
          {"word_count", s.word_count},
          {"smelly_count", s.smelly_count},
          {"distinct_smell_types", s.distinct_smell_types},
          {"alpha", {{"softened", s.alpha_softened}, {"hardened", s.alpha_hardened}}},
          {"testability", {{"softened", s.testability_softened}, {"hardened", s.testability_hardened}}}};
}

StoredScores scores_from_json(const json& j) {
  StoredScores s;
  s.clarity = j.at("clarity").get<double>();
  s.sentence_count = j.at("sentence_count").get<std::size_t>();
  s.word_count = j.at("word_count").get<std::size_t>();
  s.smelly_count = j.at("smelly_count").get<std::size_t>();
  s.distinct_smell_types = j.at("distinct_smell_types").get<std::size_t>();
  s.alpha_softened = j.at("alpha").at("softened").get<double>();
  s.alpha_hardened = j.at("alpha").at("hardened").get<double>();
  s.testability_softened = j.at("testability").at("softened").get<double>();
  s.testability_hardened = j.at("testability").at("hardened").get<double>();
  return s;
}

json project_json(const Project& p) {
  return {{"id", p.id}, {"name", p.name}, {"profile", profile_json(p.profile)}, {"created_at", p.created_at}};
}

Project project_from_json(const json& j) {
  return {j.at("id").get<std::string>(), j.at("name").get<std::string>(), profile_from_json(j.at("profile")),
          j.value("created_at", "")};
}

json requirement_json(const StoredRequirement& r) {
  json findings = json::array();
  for (const auto& f : r.findings) findings.push_back(finding_json(f, r.text));
  return {{"id", r.id},
          {"project_id", r.project_id},
          {"text", r.text},
          {"content_hash", r.content_hash},
          {"labels", labels_json(r.labels)},
          {"review", review_flag_name(r.review)},
          {"findings", std::move(findings)},
          {"scores", scores_json(r.scores)},
          {"lexicon_version", r.lexicon_version},
          {"created_at", r.created_at}};
}

StoredRequirement requirement_from_json(const json& j) {
  StoredRequirement r;
  r.id = j.at("id").get<std::string>();
  r.project_id = j.at("project_id").get<std::string>();
  r.text = j.at("text").get<std::string>();
  r.content_hash = j.value("content_hash", content_hash(r.text));
  r.labels = labels_from_json(j.at("labels"));
  const auto review = j.at("review").get<std::string>();
  if (review != "reviewed" && review != "unreviewed") raise(ErrorCode::kFormatError, "bad review flag " + review);
  r.review = review == "reviewed" ? ReviewFlag::kReviewed : ReviewFlag::kUnreviewed;
  for (const auto& f : j.at("findings")) r.findings.push_back(finding_from_json(f));
  r.scores = scores_from_json(j.at("scores"));
  r.lexicon_version = j.value("lexicon_version", "");
  r.created_at = j.value("created_at", "");
  return r;
}

json audit_json(const AuditEntry& e) {
  return {{"timestamp", e.timestamp}, {"actor", e.actor}, {"action", e.action}, {"target", e.target},
          {"detail", e.detail}};
}

AuditEntry audit_from_json(const json& j) {
  return {j.value("timestamp", ""), j.value("actor", ""), j.value("action", ""), j.value("target", ""),
          j.value("detail", "")};
}

json analysis_json(const Analysis& a) {
  json findings = json::array();
  for (const auto& f : a.softened.findings) findings.push_back(finding_json(f, a.text));
  return {{"findings", std::move(findings)},
          {"clarity", a.softened.clarity},
          {"alpha", {{"softened", a.softened.alpha}, {"hardened", a.hardened.alpha}}},
          {"testability", {{"softened", a.softened.testability}, {"hardened", a.hardened.testability}}},
          {"sentence_count", a.softened.sentence_count},
          {"word_count", a.softened.word_count},
          {"smelly_count", a.softened.smelly_count},
          {"distinct_smell_types", a.softened.distinct_smell_types}};
}

std::string analysis_table(const Analysis& a) {
  std::string out;
  char line[256];
  if (a.softened.findings.empty()) {
    out += "no smells found\n";
  } else {
    std::snprintf(line, sizeof line, "%-5s %-20s %-10s %-9s %s\n", "smell", "name", "source", "offset", "text");
    out += line;
    for (const auto& f : a.softened.findings) {
      std::snprintf(line, sizeof line, "%-5s %-20s %-10s %4zu-%-4zu %s\n",
                    std::string(smells::smell_code(f.smell)).c_str(), std::string(smells::smell_name(f.smell)).c_str(),
                    std::string(smells::source_name(f.source)).c_str(), utf8::codepoint_offset(a.text, f.span.begin),
                    utf8::codepoint_offset(a.text, f.span.end), f.matched_text.c_str());
      out += line;
    }
  }
  out += "\n";
  out += "words " + std::to_string(a.softened.word_count) + ", smelly words " +
         std::to_string(a.softened.smelly_count) + ", smell types " +
         std::to_string(a.softened.distinct_smell_types) + ", sentences " +
         std::to_string(a.softened.sentence_count) + "\n";
  out += "clarity      " + format_fixed(a.softened.clarity) + "\n";
  out += "alpha        " + format_fixed(a.softened.alpha) + " softened, " + format_fixed(a.hardened.alpha) +
         " hardened\n";
  out += "testability  " + format_fixed(a.softened.testability) + " softened, " +
         format_fixed(a.hardened.testability) + " hardened\n";
  return out;
}

}  // namespace reqlint::service
