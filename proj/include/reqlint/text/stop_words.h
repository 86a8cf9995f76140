#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace reqlint::text {

// Immutable, case-insensitive set of stop words.
class StopWordList {
 public:
  StopWordList() = default;
  explicit StopWordList(const std::vector<std::string>& words);

  // One word per line, '#' starts a comment line, surrounding blanks ignored.
  static StopWordList parse(std::string_view content);
  static StopWordList load(const std::filesystem::path& path);
  // data/stopwords.txt from the resource directory, loaded once.
  static const StopWordList& default_list();

  bool contains(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_set<std::string> entries_;
};

std::vector<std::string> remove_stop_words(const std::vector<std::string>& lemmas,
                                           const StopWordList& stops);

}  // namespace reqlint::text
