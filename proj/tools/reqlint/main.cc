// reqlint command line: analyze, build-dict, import, evaluate, serve, export.

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>

#include "reqlint/common/error.h"
#include "reqlint/common/log.h"
#include "reqlint/common/strings.h"
#include "reqlint/dictionary/builder.h"
#include "reqlint/dictionary/crawler.h"
#include "reqlint/evaluation/report_export.h"
#include "reqlint/service/http_server.h"
#include "reqlint/service/workbench.h"

namespace fs = std::filesystem;
using namespace reqlint;

namespace {

struct CommonOptions {
  std::string data_dir;
  std::string lexicon;
  std::string alpha_config;
  std::vector<std::string> modals;
  std::string log_level;
};

struct ProfileOptions {
  std::string domains;
  std::string criticality = "NonCritical";
  std::string req_type = "Functional";
  std::string templ = "SingleSentence";

  bool given() const { return !domains.empty(); }

  testability::AlphaProfile build() const {
    testability::AlphaProfile p;
    for (const auto& d : split(domains, '+')) {
      if (!trim(d).empty()) p.domains.push_back({std::string(trim(d)), std::nullopt});
    }
    const auto c = testability::parse_criticality(criticality);
    const auto t = testability::parse_requirement_type(req_type);
    const auto m = testability::parse_template(templ);
    if (!c) raise(ErrorCode::kInvalidArgs, "unknown criticality '" + criticality + "'");
    if (!t) raise(ErrorCode::kInvalidArgs, "unknown requirement type '" + req_type + "'");
    if (!m) raise(ErrorCode::kInvalidArgs, "unknown template '" + templ + "'");
    p.criticality = *c;
    p.req_type = *t;
    p.templ = *m;
    return p;
  }
};

void add_profile_options(CLI::App* cmd, ProfileOptions& p) {
  cmd->add_option("--domains", p.domains, "Domain codes joined by '+', e.g. EE+ME");
  cmd->add_option("--criticality", p.criticality, "NonCritical|BusinessCritical|MissionCritical|SafetyCritical")
      ->capture_default_str();
  cmd->add_option("--req-type", p.req_type, "NonFunctional|Functional|Business")->capture_default_str();
  cmd->add_option("--template", p.templ, "SingleSentence|MultipleSentences")->capture_default_str();
}

service::Resources resources(const CommonOptions& o) {
  service::Resources r = service::Resources::defaults();
  if (!o.lexicon.empty()) r.lexicon = smells::SmellLexicon::load(o.lexicon);
  if (!o.modals.empty()) r.pos_map = smells::PosSmellMap(std::set<std::string>(o.modals.begin(), o.modals.end()));
  if (!o.alpha_config.empty()) r.config = testability::AlphaConfig::load(o.alpha_config);
  return r;
}

fs::path data_dir(const CommonOptions& o) { return o.data_dir.empty() ? service::Store::default_dir() : fs::path(o.data_dir); }

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return read_file(path);
}

void write_output(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) raise(ErrorCode::kIoError, "cannot write " + path.string());
}

const service::Project& find_project(const std::vector<service::Project>& projects, const std::string& key) {
  for (const auto& p : projects) {
    if (p.id == key || p.name == key) return p;
  }
  raise(ErrorCode::kUnknownProject, "unknown project '" + key + "'");
}

// analyze -------------------------------------------------------------------

struct AnalyzeOptions {
  std::string input;
  std::string project;
  std::string format = "table";
  ProfileOptions profile;
};

int run_analyze(const CommonOptions& common, const AnalyzeOptions& o) {
  const auto res = resources(common);
  testability::AlphaProfile profile;
  if (!o.project.empty()) {
    service::Store store(data_dir(common));
    profile = find_project(store.projects(), o.project).profile;
  } else if (o.profile.given()) {
    profile = o.profile.build();
  } else {
    profile.domains = {{"CS", std::nullopt}};
  }
  const auto text = read_input(o.input);
  const auto analysis = text::Analyzer::default_instance().analyze(text);
  const auto findings = smells::detect_smells(analysis, res.lexicon, res.pos_map);
  using testability::AlphaPolicy;
  const service::Analysis a{
      text,
      testability::score_findings(analysis, findings,
                                  testability::compute_alpha(profile.with_policy(AlphaPolicy::kSoftened), res.config)),
      testability::score_findings(analysis, findings,
                                  testability::compute_alpha(profile.with_policy(AlphaPolicy::kHardened), res.config))};
  if (o.format == "json") {
    std::cout << service::analysis_json(a).dump(2) << "\n";
  } else {
    std::cout << service::analysis_table(a);
  }
  return 0;
}

// build-dict ----------------------------------------------------------------

struct BuildDictOptions {
  std::string corpus_dir;
  std::string endpoint;
  std::vector<std::string> categories;  // CODE=Category name
  std::string cache_dir = "corpus-cache";
  std::string out_dir = "dictionary";
  std::string labels;
  std::size_t n = 1000;
  std::size_t sub_cats = 500;
  std::size_t pages = 20;
  std::size_t dim = 50;
  std::size_t min_count = 5;
  std::size_t window = 10;
  std::size_t epochs = 5;
  std::uint64_t seed = 1;
  double threshold = dictionary::kDefaultThreshold;
  unsigned threads = 0;
  int interval_ms = 1000;
};

int run_build_dict(const CommonOptions& common, const BuildDictOptions& o) {
  const auto config = resources(common).config;
  fs::path corpus_root = o.corpus_dir;
  if (!o.endpoint.empty()) {
    // Crawl each domain's category into the cache, then read the cache.
    std::map<std::string, std::string> categories;
    for (const auto& [code, value] : config.domains()) {
      (void)value;
      const auto title = config.domain_title(code);
      if (!title.empty()) categories[code] = title;
    }
    for (const auto& c : o.categories) {
      const auto eq = c.find('=');
      if (eq == std::string::npos) raise(ErrorCode::kInvalidArgs, "--category takes CODE=Name, got '" + c + "'");
      categories[c.substr(0, eq)] = c.substr(eq + 1);
    }
    corpus_root = o.cache_dir;
    for (const auto& [code, category] : categories) {
      dictionary::CrawlOptions co;
      co.endpoint = o.endpoint;
      co.category = category;
      co.sub_cats = o.sub_cats;
      co.pages = o.pages;
      co.cache_dir = corpus_root;
      co.domain = code;
      co.min_interval = std::chrono::milliseconds(o.interval_ms);
      std::cerr << "crawling " << code << " (" << category << ")\n";
      const auto result = dictionary::crawl_wiki_category(co);
      std::cerr << "  " << result.documents.size() << " pages from " << result.subcategories.size()
                << " subcategories, " << result.failed_pages << " failed\n";
    }
  }
  if (corpus_root.empty()) raise(ErrorCode::kInvalidArgs, "give --corpus-dir or --endpoint");

  const auto& stops = text::StopWordList::default_list();
  const auto cs = dictionary::ingest_directory(corpus_root / "CS", "CS", stops);
  std::vector<dictionary::DomainCorpus> others;
  for (const auto& entry : fs::directory_iterator(corpus_root)) {
    const auto code = entry.path().filename().string();
    if (!entry.is_directory() || code == "CS") continue;
    others.push_back(dictionary::ingest_directory(entry.path(), code, stops));
  }
  std::sort(others.begin(), others.end(), [](const auto& a, const auto& b) { return a.domain < b.domain; });
  std::cerr << "CS: V " << cs.vocabulary_size << ", W " << cs.word_count << "\n";
  for (const auto& d : others) std::cerr << d.domain << ": V " << d.vocabulary_size << ", W " << d.word_count << "\n";

  dictionary::DictionaryConfig dc;
  dc.n = o.n;
  dc.threshold = o.threshold;
  dc.threads = o.threads;
  dc.trainer.dim = o.dim;
  dc.trainer.min_count = o.min_count;
  dc.trainer.window = o.window;
  dc.trainer.epochs = o.epochs;
  dc.trainer.seed = o.seed;
  auto dict = dictionary::build_dictionary(cs, others, dc);

  fs::create_directories(o.out_dir);
  const fs::path out = o.out_dir;
  if (!o.labels.empty()) dictionary::apply_labels(dict, read_file(o.labels));
  write_output(out / "ranking.csv", dictionary::export_ranking_csv(dict));
  write_output(out / "candidates.csv", dictionary::export_candidates_csv(dict));
  std::cerr << dict.rows.size() << " ranked words, " << dict.candidate_count() << " candidates, "
            << dict.unranked.size() << " unranked\n";
  try {
    write_output(out / "sensitivity.csv", dictionary::export_sensitivity_csv(dictionary::threshold_sensitivity(dict)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInvalidArgs) throw;
    std::cerr << "no smelly words, sensitivity skipped\n";
  }
  if (!o.labels.empty()) {
    write_output(out / "lexicon.csv", dictionary::to_lexicon(dict).serialize());
    std::cerr << "wrote " << (out / "lexicon.csv").string() << "\n";
  }
  std::cout << (out / "ranking.csv").string() << "\n";
  return 0;
}

// import --------------------------------------------------------------------

struct ImportOptions {
  std::string input;
  std::string profiles;
  std::string project;
  bool reviewed = false;
  std::string actor = "cli";
  ProfileOptions profile;
};

int run_import(const CommonOptions& common, const ImportOptions& o) {
  service::Workbench wb(data_dir(common), resources(common));
  const auto parsed = service::parse_dataset_csv(read_input(o.input));
  for (const auto& e : parsed.errors) std::cerr << "line " << e.line << ": " << e.reason << "\n";

  std::map<std::string, std::vector<evaluation::GroundTruthRecord>> groups;
  if (!o.project.empty()) {
    groups[o.project] = parsed.records;
  } else {
    for (const auto& r : parsed.records) groups[r.project].push_back(r);
  }
  std::map<std::string, testability::AlphaProfile> profiles;
  if (!o.profiles.empty()) profiles = testability::parse_project_profiles(read_file(o.profiles));

  std::size_t created = 0, duplicates = 0;
  for (const auto& [name, records] : groups) {
    auto project = wb.find_project_by_name(name);
    if (!project) {
      if (auto it = profiles.find(name); it != profiles.end()) {
        project = wb.create_project(name, it->second);
      } else if (o.profile.given()) {
        project = wb.create_project(name, o.profile.build());
      } else {
        raise(ErrorCode::kMissingProfile, "project '" + name + "' does not exist and has no profile");
      }
      std::cerr << "created project " << project->id << " " << name << "\n";
    }
    const auto result = wb.import_records(project->id, records, o.reviewed, o.actor);
    created += result.created.size();
    duplicates += result.duplicates.size();
  }
  std::cout << created << " imported, " << duplicates << " duplicate(s), " << parsed.errors.size()
            << " rejected row(s)\n";
  return parsed.errors.empty() ? 0 : 3;
}

// evaluate ------------------------------------------------------------------

struct EvaluateOptions {
  std::string input;
  std::string profiles;
  std::string out_dir;
  std::string format = "table";
  std::size_t permutations = 10000;
  int depth = 3;
};

int run_evaluate(const CommonOptions& common, const EvaluateOptions& o) {
  const auto res = resources(common);
  const auto parsed = service::parse_dataset_csv(read_input(o.input));
  for (const auto& e : parsed.errors) std::cerr << "line " << e.line << ": " << e.reason << "\n";
  const auto profiles = testability::parse_project_profiles(read_file(o.profiles));
  evaluation::EvaluationOptions eo;
  eo.permutations = o.permutations;
  eo.tree_depth = o.depth;
  const auto report = evaluation::evaluate_project(parsed.records, res.lexicon, res.pos_map, profiles, res.config, eo);

  if (!o.out_dir.empty()) {
    const fs::path out = o.out_dir;
    fs::create_directories(out);
    write_output(out / "smells.csv", evaluation::smell_table_csv(report));
    write_output(out / "errors.csv", evaluation::error_table_csv(report));
    write_output(out / "spearman.csv", evaluation::spearman_csv(report));
    write_output(out / "requirements.csv", evaluation::requirement_scores_csv(report));
    if (report.tree) {
      write_output(out / "tree_nodes.csv", evaluation::tree_nodes_csv(*report.tree));
      write_output(out / "tree_importance.csv", evaluation::tree_importance_csv(*report.tree));
    }
    write_output(out / "report.json", evaluation::report_json(report).dump(2));
  }
  if (o.format == "json") {
    std::cout << evaluation::report_json(report).dump(2) << "\n";
  } else {
    std::cout << evaluation::smell_table_csv(report) << "\n" << evaluation::error_table_csv(report) << "\n"
              << evaluation::spearman_csv(report);
    if (!report.spearman_note.empty()) std::cout << "# " << report.spearman_note << "\n";
    if (report.tree) std::cout << "\n" << evaluation::tree_importance_csv(*report.tree);
  }
  return 0;
}

// serve / export --------------------------------------------------------------

service::HttpServer* g_server = nullptr;

void handle_signal(int) {
  if (g_server) g_server->stop();
}

int run_serve(const CommonOptions& common, const std::string& host, int port, const std::string& ui) {
  service::Workbench wb(data_dir(common), resources(common));
  service::HttpServer server(wb, ui);
  g_server = &server;
  std::signal(SIGINT, handle_signal);
  std::signal(SIGTERM, handle_signal);
  std::cerr << "serving " << wb.store().dir().string() << " on http://" << host << ":" << port << "\n";
  const bool ok = server.listen(host, port);
  g_server = nullptr;
  if (!ok) raise(ErrorCode::kIoError, "cannot listen on " + host + ":" + std::to_string(port));
  return 0;
}

int run_export(const CommonOptions& common, const std::string& project, const std::string& output) {
  service::Workbench wb(data_dir(common), resources(common));
  const auto csv = wb.export_csv(find_project(wb.projects(), project).id);
  if (output.empty() || output == "-") {
    std::cout << csv;
  } else {
    write_output(output, csv);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reqlint: requirement smell detection and testability scoring"};
  app.require_subcommand(1);
  CommonOptions common;
  app.add_option("--data-dir", common.data_dir, "Store directory (default $REQLINT_DATA_DIR or ./reqlint-data)");
  app.add_option("--lexicon", common.lexicon, "Smell lexicon CSV (default: bundled lexicon)");
  app.add_option("--alpha-config", common.alpha_config, "Alpha aspect table");
  app.add_option("--modals", common.modals, "Uncertain modal verbs")->delimiter(',');
  app.add_option("--log-level", common.log_level, "debug|info|warning|error|off");

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Detect smells and score one requirement");
  a->add_option("input", analyze.input, "Text file, '-' or nothing for stdin");
  a->add_option("--project", analyze.project, "Stored project id or name supplying the alpha profile");
  a->add_option("--format", analyze.format, "table|json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  add_profile_options(a, analyze.profile);

  BuildDictOptions bd;
  auto* b = app.add_subcommand("build-dict", "Build the ranked smelly-word dictionary");
  b->add_option("--corpus-dir", bd.corpus_dir, "Directory with one subdirectory of .txt files per domain code");
  b->add_option("--endpoint", bd.endpoint, "MediaWiki API URL to crawl instead");
  b->add_option("--category", bd.categories, "CODE=Category overrides for crawling");
  b->add_option("--cache", bd.cache_dir, "Crawl cache directory")->capture_default_str();
  b->add_option("--out", bd.out_dir, "Output directory")->capture_default_str();
  b->add_option("--labels", bd.labels, "Labeled candidates CSV; also writes lexicon.csv");
  b->add_option("--n", bd.n, "Frequent CS words to rank")->capture_default_str();
  b->add_option("--sub-cats", bd.sub_cats, "Subcategories per domain")->capture_default_str();
  b->add_option("--pages", bd.pages, "Longest pages per subcategory")->capture_default_str();
  b->add_option("--dim", bd.dim, "Vector size")->capture_default_str();
  b->add_option("--min-count", bd.min_count, "Minimum word count")->capture_default_str();
  b->add_option("--window", bd.window, "Context window")->capture_default_str();
  b->add_option("--epochs", bd.epochs, "Training epochs")->capture_default_str();
  b->add_option("--seed", bd.seed, "Random seed")->capture_default_str();
  b->add_option("--threshold", bd.threshold, "Candidate threshold")->capture_default_str();
  b->add_option("--threads", bd.threads, "Training threads, 0 for all cores")->capture_default_str();
  b->add_option("--interval-ms", bd.interval_ms, "Minimum spacing of wiki requests")->capture_default_str();

  ImportOptions imp;
  auto* i = app.add_subcommand("import", "Import an annotated dataset CSV into the store");
  i->add_option("input", imp.input, "Dataset CSV, '-' for stdin")->required();
  i->add_option("--profiles", imp.profiles, "CSV project,domains,criticality,req_type,template");
  i->add_option("--project", imp.project, "Put every row in this project");
  i->add_flag("--reviewed", imp.reviewed, "Mark imported labels as reviewed ground truth");
  i->add_option("--actor", imp.actor, "Name recorded in the audit log")->capture_default_str();
  add_profile_options(i, imp.profile);

  EvaluateOptions ev;
  auto* e = app.add_subcommand("evaluate", "Compare detection with an annotated dataset");
  e->add_option("input", ev.input, "Dataset CSV, '-' for stdin")->required();
  e->add_option("--profiles", ev.profiles, "CSV project,domains,criticality,req_type,template")->required();
  e->add_option("--out", ev.out_dir, "Write CSV tables and report.json here");
  e->add_option("--format", ev.format, "table|json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  e->add_option("--permutations", ev.permutations, "Spearman permutations")->capture_default_str();
  e->add_option("--depth", ev.depth, "Regression tree depth")->capture_default_str();

  std::string host = "127.0.0.1", ui;
  int port = 8080;
  auto* s = app.add_subcommand("serve", "Run the HTTP API");
  s->add_option("--port", port, "TCP port")->capture_default_str();
  s->add_option("--host", host, "Bind address")->capture_default_str();
  s->add_option("--ui", ui, "Directory served under /ui");

  std::string export_project, export_out;
  auto* x = app.add_subcommand("export", "Write a project as dataset CSV");
  x->add_option("--project", export_project, "Project id or name")->required();
  x->add_option("-o,--output", export_out, "Output file, stdout by default");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!common.log_level.empty()) {
      static const std::map<std::string, log::Level> levels = {{"debug", log::Level::kDebug},
                                                               {"info", log::Level::kInfo},
                                                               {"warning", log::Level::kWarning},
                                                               {"error", log::Level::kError},
                                                               {"off", log::Level::kOff}};
      const auto it = levels.find(common.log_level);
      if (it == levels.end()) raise(ErrorCode::kInvalidArgs, "unknown log level '" + common.log_level + "'");
      log::set_level(it->second);
    }
    if (*a) return run_analyze(common, analyze);
    if (*b) return run_build_dict(common, bd);
    if (*i) return run_import(common, imp);
    if (*e) return run_evaluate(common, ev);
    if (*s) return run_serve(common, host, port, ui);
    if (*x) return run_export(common, export_project, export_out);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
