#pragma once

// Generators for planted-word corpora. Independent of the library: plain
// <random>-free arithmetic on reqlint::Rng draws only.

#include <string>
#include <vector>

#include "reqlint/common/random.h"

namespace reqlint::testing {

using Doc = std::vector<std::string>;

inline std::vector<std::string> topic_words(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// `docs` documents of `length` words drawn from `topic`, each with one
// planted word per entry of `planted` placed at a random position.
inline std::vector<Doc> planted_docs(Rng& rng, const std::vector<std::string>& topic,
                                     const std::vector<std::string>& planted, int docs, int length) {
  std::vector<Doc> out;
  for (int d = 0; d < docs; ++d) {
    Doc doc;
    for (int i = 0; i < length; ++i) doc.push_back(topic[rng.below(topic.size())]);
    for (const auto& p : planted) doc[rng.below(doc.size())] = p;
    out.push_back(std::move(doc));
  }
  return out;
}

}  // namespace reqlint::testing
