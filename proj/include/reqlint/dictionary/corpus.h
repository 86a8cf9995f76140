#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/text/pipeline.h"
#include "reqlint/text/stop_words.h"

namespace reqlint::dictionary {

using Document = std::vector<std::string>;  // cleaned lemma stream

struct DomainCorpus {
  std::string domain;
  std::vector<Document> documents;
  std::size_t vocabulary_size = 0;  // V: distinct lemmas
  std::size_t word_count = 0;       // W: total lemmas
};

// Lemmas of `text` with punctuation, tokens without letters and stop words
// (checked on both surface and lemma) removed. Lowercase.
Document clean_document(std::string_view text, const text::StopWordList& stops,
                        const text::Analyzer& analyzer = text::Analyzer::default_instance());

// Cleans every document; empty results are dropped. Throws
// Error(kEmptySource) when nothing is left.
DomainCorpus make_corpus(std::string domain, const std::vector<std::string>& raw_documents,
                         const text::StopWordList& stops,
                         const text::Analyzer& analyzer = text::Analyzer::default_instance());

// Reads `dir/*.txt` in file-name order. Throws kIoError for a missing
// directory, kEmptySource when no document has content.
DomainCorpus ingest_directory(const std::filesystem::path& dir, std::string domain, const text::StopWordList& stops,
                              const text::Analyzer& analyzer = text::Analyzer::default_instance());

// Recomputes V and W from the documents.
void recount(DomainCorpus& corpus);

// The n most frequent lemmas, ties in lexicographic order.
std::vector<std::string> top_frequent_words(const DomainCorpus& corpus, std::size_t n);

// Each occurrence of a target becomes "_" + lemma.
Document prefix_occurrences(const Document& doc, const std::set<std::string>& targets);

}  // namespace reqlint::dictionary
