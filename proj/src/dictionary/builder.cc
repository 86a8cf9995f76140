#include "reqlint/dictionary/builder.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <thread>

#include "reqlint/common/csv.h"
#include "reqlint/common/error.h"
#include "reqlint/common/log.h"
#include "reqlint/common/strings.h"

namespace reqlint::dictionary {
namespace {

double mean_of(const std::vector<std::optional<double>>& sims, std::size_t skip = SIZE_MAX) {
  double sum = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < sims.size(); ++i) {
    if (i == skip || !sims[i]) continue;
    sum += *sims[i];
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

std::optional<double> parse_cell(const std::string& cell, std::size_t line) {
  const auto t = trim(cell);
  if (t.empty()) return std::nullopt;
  const std::string s(t);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw Error(ErrorCode::kFormatError, "bad number '" + s + "'", line);
  return v;
}

}  // namespace

std::size_t RankedRow::available() const {
  return static_cast<std::size_t>(std::count_if(similarity.begin(), similarity.end(), [](auto& s) { return s.has_value(); }));
}

const RankedRow* RankedDictionary::find(std::string_view word) const {
  for (const auto& r : rows) {
    if (r.word == word) return &r;
  }
  return nullptr;
}

std::size_t RankedDictionary::candidate_count() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](auto& r) { return r.candidate; }));
}

RankedDictionary rank_rows(std::vector<std::string> domains, std::vector<RankedRow> rows, double threshold) {
  RankedDictionary dict;
  dict.domains = std::move(domains);
  dict.threshold = threshold;
  for (auto& r : rows) {
    if (r.available() == 0) {
      dict.unranked.push_back(r.word);
      continue;
    }
    r.mean = mean_of(r.similarity);
    r.candidate = r.mean <= threshold;
    dict.rows.push_back(std::move(r));
  }
  std::sort(dict.rows.begin(), dict.rows.end(), [](const RankedRow& a, const RankedRow& b) {
    return a.mean != b.mean ? a.mean < b.mean : a.word < b.word;
  });
  std::sort(dict.unranked.begin(), dict.unranked.end());
  return dict;
}

RankedDictionary build_dictionary(const DomainCorpus& cs, const std::vector<DomainCorpus>& others,
                                  const DictionaryConfig& config) {
  if (others.empty()) raise(ErrorCode::kNoOtherCorpora, "need at least one corpus besides computer science");
  if (config.n == 0) raise(ErrorCode::kInvalidArgs, "n must be at least 1");
  const auto frequent = top_frequent_words(cs, config.n);
  const std::set<std::string> targets(frequent.begin(), frequent.end());

  std::vector<std::vector<std::optional<double>>> sims(others.size());
  std::vector<std::exception_ptr> errors(others.size());
  const auto train_domain = [&](std::size_t d) {
    try {
      std::vector<Document> merged = cs.documents;
      for (const auto& doc : others[d].documents) merged.push_back(prefix_occurrences(doc, targets));
      log::info("training " + cs.domain + "+" + others[d].domain + " on " + std::to_string(merged.size()) +
                " documents");
      const auto model = train_cbow(merged, config.trainer);
      auto& out = sims[d];
      out.resize(frequent.size());
      for (std::size_t i = 0; i < frequent.size(); ++i) {
        const auto a = model.index(frequent[i]);
        const auto b = model.index("_" + frequent[i]);
        if (a && b) out[i] = cosine_similarity(model.vector(*a), model.vector(*b));
      }
    } catch (...) {
      errors[d] = std::current_exception();
    }
  };

  unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(others.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t d; (d = next.fetch_add(1)) < others.size();) train_domain(d);
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<std::string> domains;
  for (const auto& o : others) domains.push_back(o.domain);
  std::vector<RankedRow> rows(frequent.size());
  for (std::size_t i = 0; i < frequent.size(); ++i) {
    rows[i].word = frequent[i];
    for (std::size_t d = 0; d < others.size(); ++d) rows[i].similarity.push_back(sims[d][i]);
  }
  return rank_rows(std::move(domains), std::move(rows), config.threshold);
}

std::string export_ranking_csv(const RankedDictionary& dict) {
  std::vector<std::string> header = {"word"};
  header.insert(header.end(), dict.domains.begin(), dict.domains.end());
  header.push_back("mean");
  header.push_back("smell");
  std::string out = csv::format_row(header);
  for (const auto& r : dict.rows) {
    std::vector<std::string> f = {r.word};
    for (const auto& s : r.similarity) f.push_back(s ? format_fixed(*s) : "");
    f.push_back(format_fixed(r.mean));
    f.push_back(r.label ? std::string(smells::smell_code(*r.label)) : "");
    out += csv::format_row(f);
  }
  return out;
}

RankedDictionary parse_ranking_csv(std::string_view content, double threshold) {
  const auto records = csv::parse(content, '#');
  if (records.empty()) raise(ErrorCode::kFormatError, "empty ranking file");
  const auto& header = records.front().fields;
  if (header.size() < 3 || header.front() != "word") {
    throw Error(ErrorCode::kFormatError, "expected header word,<domains...>,mean[,smell]", records.front().line);
  }
  const bool has_smell = header.back() == "smell";
  const std::size_t mean_col = header.size() - (has_smell ? 2 : 1);
  if (header[mean_col] != "mean") throw Error(ErrorCode::kFormatError, "missing mean column", records.front().line);
  std::vector<std::string> domains(header.begin() + 1, header.begin() + static_cast<long>(mean_col));
  std::vector<RankedRow> rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r].fields;
    if (f.size() != header.size()) throw Error(ErrorCode::kFormatError, "wrong field count", records[r].line);
    RankedRow row;
    row.word = f[0];
    for (std::size_t d = 1; d < mean_col; ++d) row.similarity.push_back(parse_cell(f[d], records[r].line));
    if (has_smell && !trim(f.back()).empty()) {
      const auto smell = smells::parse_smell(f.back());
      if (!smell) throw Error(ErrorCode::kUnknownSmellCode, "unknown smell '" + f.back() + "'", records[r].line);
      row.label = smell;
    }
    rows.push_back(std::move(row));
  }
  return rank_rows(std::move(domains), std::move(rows), threshold);
}

std::string export_candidates_csv(const RankedDictionary& dict) {
  std::string out = "# Fill the smell column with S1, S2, S3 or S9; leave it empty for clean words.\n";
  out += csv::format_row({"word", "mean", "smell"});
  for (const auto& r : dict.rows) {
    if (!r.candidate) continue;
    out += csv::format_row({r.word, format_fixed(r.mean), r.label ? std::string(smells::smell_code(*r.label)) : ""});
  }
  return out;
}

void apply_labels(RankedDictionary& dict, std::string_view candidates_csv) {
  const auto records = csv::parse(candidates_csv, '#');
  if (records.empty()) return;
  const auto& header = records.front().fields;
  if (header.size() != 3 || header[0] != "word" || header[2] != "smell") {
    throw Error(ErrorCode::kFormatError, "expected header word,mean,smell", records.front().line);
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r].fields;
    if (f.size() != 3) throw Error(ErrorCode::kFormatError, "wrong field count", records[r].line);
    auto it = std::find_if(dict.rows.begin(), dict.rows.end(), [&](auto& row) { return row.word == f[0]; });
    if (it == dict.rows.end()) throw Error(ErrorCode::kInvalidTerm, "'" + f[0] + "' is not ranked", records[r].line);
    if (trim(f[2]).empty()) {
      it->label.reset();
      continue;
    }
    const auto smell = smells::parse_smell(f[2]);
    if (!smell || !smells::is_lexicon_smell(*smell)) {
      throw Error(ErrorCode::kUnknownSmellCode, "'" + f[2] + "' is not a dictionary smell", records[r].line);
    }
    it->label = smell;
  }
}

smells::SmellLexicon to_lexicon(const RankedDictionary& dict) {
  std::vector<smells::LexiconEntry> entries;
  for (const auto& r : dict.rows) {
    if (r.label && smells::is_lexicon_smell(*r.label)) entries.push_back({r.word, *r.label, r.mean});
  }
  return smells::SmellLexicon(std::move(entries), smells::LexiconProvenance::kAutoBuilt);
}

std::vector<SensitivityRow> threshold_sensitivity(const RankedDictionary& dict) {
  std::vector<const RankedRow*> smelly;
  for (const auto& r : dict.rows) {
    if (r.label) smelly.push_back(&r);
  }
  if (smelly.empty()) {
    for (const auto& r : dict.rows) {
      if (r.candidate) smelly.push_back(&r);
    }
  }
  if (smelly.empty()) raise(ErrorCode::kInvalidArgs, "no smelly words to bound");

  const auto boundary = [&](std::size_t skip) {
    double b = -2;
    for (const auto* r : smelly) {
      bool any = false;
      for (std::size_t d = 0; d < r->similarity.size(); ++d) any = any || (d != skip && r->similarity[d]);
      if (any) b = std::max(b, mean_of(r->similarity, skip));
    }
    return b;
  };
  std::vector<SensitivityRow> out;
  const double base = boundary(SIZE_MAX);
  out.push_back({"", base, 0.0, 0});
  for (std::size_t d = 0; d < dict.domains.size(); ++d) {
    SensitivityRow row;
    row.excluded = dict.domains[d];
    row.boundary = boundary(d);
    row.delta = row.boundary - base;
    for (const auto& r : dict.rows) {
      bool any = false;
      for (std::size_t k = 0; k < r.similarity.size(); ++k) any = any || (k != d && r.similarity[k]);
      if (!any) continue;
      row.changed += (mean_of(r.similarity, d) <= dict.threshold) != r.candidate;
    }
    out.push_back(row);
  }
  return out;
}

std::string export_sensitivity_csv(const std::vector<SensitivityRow>& rows) {
  std::string out = csv::format_row({"configuration", "boundary", "delta", "changed"});
  for (const auto& r : rows) {
    out += csv::format_row({r.excluded.empty() ? "all domains" : "all domains except " + r.excluded,
                            format_fixed(r.boundary), format_fixed(r.delta), std::to_string(r.changed)});
  }
  return out;
}

}  // namespace reqlint::dictionary
