#include "reqlint/smells/lexicon.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_set>

#include "reqlint/common/csv.h"
#include "reqlint/common/error.h"
#include "reqlint/common/strings.h"

namespace reqlint::smells {
namespace {

constexpr std::string_view kProvenanceTag = "provenance:";

std::size_t count_words(std::string_view term) {
  std::size_t n = term.empty() ? 0 : 1;
  for (char c : term) n += c == ' ';
  return n;
}

[[noreturn]] void fail(ErrorCode code, const std::string& msg, std::optional<std::size_t> line) {
  throw Error(code, msg, line);
}

void validate(const LexiconEntry& e, std::optional<std::size_t> line) {
  if (e.term.empty()) fail(ErrorCode::kFormatError, "empty term", line);
  if (count_words(e.term) > SmellLexicon::kMaxKeyLemmas) {
    fail(ErrorCode::kFormatError, "term '" + e.term + "' has more than 5 lemmas", line);
  }
  if (!is_lexicon_smell(e.smell)) {
    fail(ErrorCode::kUnknownSmellCode,
         std::string(smell_code(e.smell)) + " cannot be a dictionary smell (term '" + e.term + "')", line);
  }
  if (e.mean_similarity && !(std::isfinite(*e.mean_similarity) && std::abs(*e.mean_similarity) <= 1.0)) {
    fail(ErrorCode::kFormatError, "mean_similarity outside [-1, 1] for '" + e.term + "'", line);
  }
}

}  // namespace

std::string_view provenance_name(LexiconProvenance p) {
  return p == LexiconProvenance::kHandMade ? "hand_made" : "auto_built";
}

std::string normalize_term(std::string_view term) {
  std::string out;
  for (const auto& part : split(to_lower(trim(term)), ' ')) {
    const auto w = trim(part);
    if (w.empty()) continue;
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

SmellLexicon::SmellLexicon(std::vector<LexiconEntry> entries, LexiconProvenance provenance)
    : entries_(std::move(entries)), provenance_(provenance) {
  std::unordered_set<std::string> seen;
  for (auto& e : entries_) {
    e.term = normalize_term(e.term);
    validate(e, std::nullopt);
    if (!seen.insert(e.term).second) fail(ErrorCode::kDuplicateKey, "duplicate term '" + e.term + "'", std::nullopt);
  }
  index();
}

SmellLexicon SmellLexicon::parse(std::string_view content) {
  LexiconProvenance provenance = LexiconProvenance::kAutoBuilt;
  // Provenance lives in a comment, so scan raw lines before CSV parsing.
  std::size_t line_no = 0;
  for (const auto& raw : split(content, '\n')) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() != '#') continue;
    line.remove_prefix(1);
    line = trim(line);
    if (line.substr(0, kProvenanceTag.size()) != kProvenanceTag) continue;
    const auto value = trim(line.substr(kProvenanceTag.size()));
    if (value == "hand_made") {
      provenance = LexiconProvenance::kHandMade;
    } else if (value == "auto_built") {
      provenance = LexiconProvenance::kAutoBuilt;
    } else {
      fail(ErrorCode::kFormatError, "unknown provenance '" + std::string(value) + "'", line_no);
    }
  }

  const auto records = csv::parse(content, '#');
  SmellLexicon lex;
  lex.provenance_ = provenance;
  if (records.empty()) {
    lex.index();
    return lex;
  }
  const auto& header = records.front();
  const bool has_similarity = header.fields.size() == 3;
  if (header.fields.size() < 2 || header.fields.size() > 3 || trim(header.fields[0]) != "term" ||
      trim(header.fields[1]) != "smell" || (has_similarity && trim(header.fields[2]) != "mean_similarity")) {
    fail(ErrorCode::kFormatError, "expected header term,smell,mean_similarity", header.line);
  }

  std::unordered_set<std::string> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.fields.size()) {
      fail(ErrorCode::kFormatError,
           "expected " + std::to_string(header.fields.size()) + " fields, got " + std::to_string(rec.fields.size()),
           rec.line);
    }
    LexiconEntry e;
    e.term = normalize_term(rec.fields[0]);
    const auto smell = parse_smell(rec.fields[1]);
    if (!smell) fail(ErrorCode::kUnknownSmellCode, "unknown smell code '" + rec.fields[1] + "'", rec.line);
    e.smell = *smell;
    if (has_similarity && !trim(rec.fields[2]).empty()) {
      const std::string value(trim(rec.fields[2]));
      char* end = nullptr;
      const double v = std::strtod(value.c_str(), &end);
      if (end != value.c_str() + value.size()) {
        fail(ErrorCode::kFormatError, "bad mean_similarity '" + value + "'", rec.line);
      }
      e.mean_similarity = v;
    }
    validate(e, rec.line);
    if (!seen.insert(e.term).second) fail(ErrorCode::kDuplicateKey, "duplicate term '" + e.term + "'", rec.line);
    lex.entries_.push_back(std::move(e));
  }
  lex.index();
  return lex;
}

SmellLexicon SmellLexicon::load(const std::filesystem::path& path) { return parse(read_file(path)); }

const SmellLexicon& SmellLexicon::default_lexicon() {
  static const SmellLexicon lex = load(resource_path("lexicon/default.csv"));
  return lex;
}

const SmellLexicon& SmellLexicon::hand_made_lexicon() {
  static const SmellLexicon lex = load(resource_path("lexicon/hand_made.csv"));
  return lex;
}

std::string SmellLexicon::serialize() const {
  std::string out = "# provenance: " + std::string(provenance_name(provenance_)) + "\n";
  out += "term,smell,mean_similarity\n";
  for (const auto& e : entries_) {
    out += csv::format_row({e.term, std::string(smell_code(e.smell)),
                            e.mean_similarity ? format_fixed(*e.mean_similarity) : ""});
  }
  return out;
}

const LexiconEntry* SmellLexicon::find(std::string_view term) const {
  const auto key = normalize_term(term);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const LexiconEntry& e, const std::string& k) { return e.term < k; });
  return it != entries_.end() && it->term == key ? &*it : nullptr;
}

void SmellLexicon::index() {
  std::sort(entries_.begin(), entries_.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) { return a.term < b.term; });
  trie_.assign(1, Node{});
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    std::size_t node = 0;
    for (const auto& word : split(entries_[i].term, ' ')) {
      auto it = trie_[node].children.find(word);
      if (it == trie_[node].children.end()) {
        trie_.push_back(Node{});
        it = trie_[node].children.emplace(word, trie_.size() - 1).first;
      }
      node = it->second;
    }
    trie_[node].entry = static_cast<int>(i);
  }
  version_ = hex64(fnv1a64(serialize()));
}

}  // namespace reqlint::smells
