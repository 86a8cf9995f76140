#include "reqlint/dictionary/corpus.h"

#include <algorithm>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "reqlint/common/error.h"
#include "reqlint/common/strings.h"
#include "reqlint/common/utf8.h"

namespace reqlint::dictionary {
namespace {

bool has_letter(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto d = utf8::decode(s, i);
    if (utf8::is_letter(d.cp)) return true;
    i += d.length;
  }
  return false;
}

}  // namespace

Document clean_document(std::string_view text, const text::StopWordList& stops, const text::Analyzer& analyzer) {
  Document out;
  if (trim(text).empty()) return out;
  const auto a = analyzer.analyze(text);
  for (const auto& t : a.tokens) {
    if (!t.is_word || !has_letter(t.surface)) continue;
    if (stops.contains(t.surface) || stops.contains(t.lemma)) continue;
    out.push_back(to_lower(t.lemma));
  }
  return out;
}

void recount(DomainCorpus& corpus) {
  std::unordered_set<std::string> vocab;
  corpus.word_count = 0;
  for (const auto& doc : corpus.documents) {
    corpus.word_count += doc.size();
    vocab.insert(doc.begin(), doc.end());
  }
  corpus.vocabulary_size = vocab.size();
}

DomainCorpus make_corpus(std::string domain, const std::vector<std::string>& raw_documents,
                         const text::StopWordList& stops, const text::Analyzer& analyzer) {
  DomainCorpus c;
  c.domain = std::move(domain);
  for (const auto& raw : raw_documents) {
    auto doc = clean_document(raw, stops, analyzer);
    if (!doc.empty()) c.documents.push_back(std::move(doc));
  }
  if (c.documents.empty()) raise(ErrorCode::kEmptySource, "corpus '" + c.domain + "' has no content");
  recount(c);
  return c;
}

DomainCorpus ingest_directory(const std::filesystem::path& dir, std::string domain, const text::StopWordList& stops,
                              const text::Analyzer& analyzer) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) raise(ErrorCode::kIoError, "not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::string> raw;
  raw.reserve(files.size());
  for (const auto& f : files) raw.push_back(read_file(f));
  return make_corpus(std::move(domain), raw, stops, analyzer);
}

std::vector<std::string> top_frequent_words(const DomainCorpus& corpus, std::size_t n) {
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& doc : corpus.documents) {
    for (const auto& w : doc) ++counts[w];
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ranked.size() && i < n; ++i) out.push_back(ranked[i].first);
  return out;
}

Document prefix_occurrences(const Document& doc, const std::set<std::string>& targets) {
  Document out;
  out.reserve(doc.size());
  for (const auto& w : doc) out.push_back(targets.count(w) ? "_" + w : w);
  return out;
}

}  // namespace reqlint::dictionary
