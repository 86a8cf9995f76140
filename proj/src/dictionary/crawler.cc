#include "reqlint/dictionary/crawler.h"

#include <httplib.h>

#include <algorithm>
#include <deque>
#include <fstream>
#include <json.hpp>
#include <set>
#include <thread>

#include "reqlint/common/error.h"
#include "reqlint/common/log.h"
#include "reqlint/common/strings.h"

namespace reqlint::dictionary {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct PageInfo {
  std::uint64_t id;
  std::string title;
  std::uint64_t length;
};

class WikiClient {
 public:
  explicit WikiClient(const CrawlOptions& o) : options_(o) {
    const auto scheme_end = o.endpoint.find("://");
    if (scheme_end == std::string::npos) raise(ErrorCode::kInvalidArgs, "endpoint needs a scheme: " + o.endpoint);
    const auto path_start = o.endpoint.find('/', scheme_end + 3);
    base_ = o.endpoint.substr(0, path_start);
    path_ = path_start == std::string::npos ? "/" : o.endpoint.substr(path_start);
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
    if (base_.rfind("https", 0) == 0) raise(ErrorCode::kInvalidArgs, "built without TLS support: " + o.endpoint);
#endif
    client_ = std::make_unique<httplib::Client>(base_);
    client_->set_connection_timeout(o.timeout);
    client_->set_read_timeout(o.timeout);
    client_->set_follow_location(true);
  }

  json query(httplib::Params params) {
    params.emplace("action", "query");
    params.emplace("format", "json");
    params.emplace("formatversion", "1");
    pace();
    const auto res = client_->Get(path_, params, {{"User-Agent", options_.user_agent}});
    if (!res) raise(ErrorCode::kHttpError, base_ + path_ + ": " + httplib::to_string(res.error()));
    if (res->status != 200) raise(ErrorCode::kHttpError, base_ + path_ + ": HTTP " + std::to_string(res->status));
    try {
      return json::parse(res->body);
    } catch (const json::exception& e) {
      raise(ErrorCode::kHttpError, std::string("malformed API response: ") + e.what());
    }
  }

 private:
  void pace() {
    if (last_) {
      const auto wait = *last_ + options_.min_interval - Clock::now();
      if (wait > Clock::duration::zero()) std::this_thread::sleep_for(wait);
    }
    last_ = Clock::now();
  }

  const CrawlOptions& options_;
  std::string base_;
  std::string path_;
  std::unique_ptr<httplib::Client> client_;
  std::optional<Clock::time_point> last_;
};

std::string category_title(const std::string& name) {
  return name.rfind("Category:", 0) == 0 ? name : "Category:" + name;
}

bool category_exists(WikiClient& wiki, const std::string& title) {
  const auto r = wiki.query({{"titles", title}});
  const auto pages = r.value("/query/pages"_json_pointer, json::object());
  for (const auto& [_, page] : pages.items()) {
    if (page.contains("missing") || page.contains("invalid")) return false;
  }
  return !pages.empty();
}

// Pages the listing call paginates with a continue token.
template <typename Fn>
void paginate(WikiClient& wiki, httplib::Params params, const std::string& token, Fn&& fn) {
  for (;;) {
    const auto r = wiki.query(params);
    if (!fn(r)) return;
    if (!r.contains("continue") || !r["continue"].contains(token)) return;
    params.erase(token);
    params.emplace(token, r["continue"][token].get<std::string>());
  }
}

std::vector<std::string> subcategories(WikiClient& wiki, const std::string& title, std::size_t limit) {
  std::vector<std::string> out;
  paginate(wiki, {{"list", "categorymembers"}, {"cmtitle", title}, {"cmtype", "subcat"}, {"cmlimit", "500"}},
           "cmcontinue", [&](const json& r) {
             for (const auto& m : r.value("/query/categorymembers"_json_pointer, json::array())) {
               out.push_back(m.value("title", ""));
             }
             return out.size() < limit;
           });
  return out;
}

std::vector<PageInfo> pages_of(WikiClient& wiki, const std::string& title) {
  std::vector<PageInfo> out;
  paginate(wiki,
           {{"generator", "categorymembers"}, {"gcmtitle", title}, {"gcmtype", "page"}, {"gcmlimit", "500"},
            {"prop", "info"}},
           "gcmcontinue", [&](const json& r) {
             const auto pages = r.value("/query/pages"_json_pointer, json::object());
             for (const auto& [_, p] : pages.items()) {
               out.push_back({p.value("pageid", std::uint64_t{0}), p.value("title", ""), p.value("length", std::uint64_t{0})});
             }
             return true;
           });
  std::sort(out.begin(), out.end(),
            [](const PageInfo& a, const PageInfo& b) { return a.length != b.length ? a.length > b.length : a.id < b.id; });
  return out;
}

std::string page_text(WikiClient& wiki, std::uint64_t id) {
  const auto r = wiki.query({{"prop", "extracts"}, {"explaintext", "1"}, {"pageids", std::to_string(id)}});
  const auto page = r.value(json::json_pointer("/query/pages/" + std::to_string(id)), json::object());
  if (!page.contains("extract")) raise(ErrorCode::kHttpError, "no extract for page " + std::to_string(id));
  return page["extract"].get<std::string>();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
    if (!out) raise(ErrorCode::kIoError, "cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

CrawlResult crawl_wiki_category(const CrawlOptions& o) {
  WikiClient wiki(o);
  const auto root = category_title(o.category);
  if (!category_exists(wiki, root)) raise(ErrorCode::kCategoryNotFound, "category not found: " + root);

  CrawlResult result;
  std::set<std::string> seen = {root};
  std::deque<std::string> queue = {root};
  while (!queue.empty() && result.subcategories.size() < o.sub_cats) {
    const auto current = queue.front();
    queue.pop_front();
    for (const auto& sub : subcategories(wiki, current, o.sub_cats - result.subcategories.size())) {
      if (result.subcategories.size() >= o.sub_cats) break;
      if (!seen.insert(sub).second) continue;
      result.subcategories.push_back(sub);
      queue.push_back(sub);
    }
  }

  std::filesystem::path cache;
  if (!o.cache_dir.empty()) {
    cache = o.cache_dir / o.domain;
    std::filesystem::create_directories(cache);
  }
  std::set<std::uint64_t> taken;
  for (const auto& cat : result.subcategories) {
    std::size_t got = 0;
    for (const auto& page : pages_of(wiki, cat)) {
      if (got >= o.pages) break;
      if (!taken.insert(page.id).second) continue;
      ++got;
      RawDocument doc{page.id, page.title, "", false};
      const auto cached = cache.empty() ? std::filesystem::path() : cache / (std::to_string(page.id) + ".txt");
      if (!cached.empty() && std::filesystem::exists(cached)) {
        doc.text = read_file(cached);
        doc.from_cache = true;
      } else {
        try {
          doc.text = page_text(wiki, page.id);
        } catch (const Error& e) {
          log::warning("skipping page " + std::to_string(page.id) + " (" + page.title + "): " + e.what());
          ++result.failed_pages;
          continue;
        }
        if (!cached.empty()) write_atomic(cached, doc.text);
      }
      result.documents.push_back(std::move(doc));
    }
  }
  if (result.failed_pages > 0) {
    log::warning(std::to_string(result.failed_pages) + " pages failed; returning partial results");
  }
  return result;
}

}  // namespace reqlint::dictionary
