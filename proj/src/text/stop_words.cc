#include "reqlint/text/stop_words.h"

#include "reqlint/common/strings.h"

namespace reqlint::text {

StopWordList::StopWordList(const std::vector<std::string>& words) {
  for (const auto& w : words) entries_.insert(to_lower(trim(w)));
}

StopWordList StopWordList::parse(std::string_view content) {
  std::vector<std::string> words;
  for (const auto& line : split(content, '\n')) {
    const auto w = trim(line);
    if (w.empty() || w.front() == '#') continue;
    words.emplace_back(w);
  }
  return StopWordList(words);
}

StopWordList StopWordList::load(const std::filesystem::path& path) { return parse(read_file(path)); }

const StopWordList& StopWordList::default_list() {
  static const StopWordList list = load(resource_path("stopwords.txt"));
  return list;
}

bool StopWordList::contains(std::string_view word) const {
  return entries_.count(to_lower(word)) > 0;
}

std::vector<std::string> remove_stop_words(const std::vector<std::string>& lemmas,
                                           const StopWordList& stops) {
  std::vector<std::string> out;
  out.reserve(lemmas.size());
  for (const auto& l : lemmas) {
    if (!stops.contains(l)) out.push_back(l);
  }
  return out;
}

}  // namespace reqlint::text
