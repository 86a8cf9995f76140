#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace reqlint::dictionary {

struct CrawlOptions {
  std::string endpoint;  // MediaWiki API URL, e.g. https://en.wikipedia.org/w/api.php
  std::string category;  // without the "Category:" prefix
  std::size_t sub_cats = 500;
  std::size_t pages = 20;                  // longest pages taken per subcategory
  std::filesystem::path cache_dir;         // empty: no cache
  std::string domain = "default";          // cache subdirectory
  std::chrono::milliseconds min_interval{1000};
  std::chrono::seconds timeout{30};
  std::string user_agent = "reqlint-corpus-builder/1.0";
};

struct RawDocument {
  std::uint64_t page_id = 0;
  std::string title;
  std::string text;
  bool from_cache = false;
};

struct CrawlResult {
  std::vector<RawDocument> documents;
  std::vector<std::string> subcategories;  // visited, breadth-first order
  std::size_t failed_pages = 0;
};

// Breadth-first walk below the root category: up to `sub_cats`
// subcategories (the root itself is not counted), and from each the
// `pages` longest pages as plain text. Requests go out one at a time, at
// least `min_interval` apart. Page texts are cached as
// cache_dir/<domain>/<page id>.txt and reused, so an interrupted crawl can
// be resumed.
//
// Throws Error(kCategoryNotFound) for a missing root and Error(kHttpError)
// when a category listing fails. A failed page is logged and skipped.
CrawlResult crawl_wiki_category(const CrawlOptions& options);

}  // namespace reqlint::dictionary
