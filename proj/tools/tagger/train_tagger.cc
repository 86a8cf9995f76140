// Offline helper for the bundled POS model.
//
//   train_tagger tokenize < sentences.txt > tokenized.txt
//   train_tagger train --corpus silver.tsv --out en-perceptron.bin
//   train_tagger tag --model en-perceptron.bin < text.txt
//
// `tokenize` writes each input line's tokens separated by U+001F so the
// corpus script tags exactly the token boundaries the library produces.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "reqlint/common/error.h"
#include "reqlint/common/strings.h"
#include "reqlint/text/pos_tagger.h"
#include "reqlint/text/tokenizer.h"

using namespace reqlint;

namespace {

int run_tokenize() {
  std::string line;
  while (std::getline(std::cin, line)) {
    const auto tokens = text::tokenize(line);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i) std::cout << '\x1f';
      std::cout << tokens[i].surface;
    }
    std::cout << '\n';
  }
  return 0;
}

int run_tag(const std::string& model) {
  const auto tagger = text::PerceptronTagger::load(model);
  std::string line;
  while (std::getline(std::cin, line)) {
    auto tokens = text::tokenize(line);
    tagger->tag(tokens, 0, tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      std::cout << (i ? " " : "") << tokens[i].surface << '/' << tokens[i].tag;
    }
    std::cout << '\n';
  }
  return 0;
}

double accuracy(const text::PerceptronTagger& tagger, const std::vector<text::TaggedSentence>& gold) {
  std::size_t right = 0, total = 0;
  for (const auto& s : gold) {
    const auto tags = tagger.tag(s.words);
    for (std::size_t i = 0; i < tags.size(); ++i) {
      right += tags[i] == s.tags[i];
      ++total;
    }
  }
  return total ? static_cast<double>(right) / total : 0.0;
}

int run_train(const std::string& corpus, const std::string& out, int iterations, std::uint64_t seed,
              double holdout) {
  auto sentences = text::parse_tagged_corpus(read_file(corpus));
  const auto n_hold = static_cast<std::size_t>(sentences.size() * holdout);
  std::vector<text::TaggedSentence> held(sentences.end() - static_cast<std::ptrdiff_t>(n_hold), sentences.end());
  sentences.resize(sentences.size() - n_hold);

  text::TaggerTrainingOptions opts;
  opts.iterations = iterations;
  opts.seed = seed;
  const auto tagger = text::PerceptronTagger::train(sentences, opts);
  tagger.save(out);
  std::cout << "sentences " << sentences.size() << ", features " << tagger.feature_count() << '\n';
  if (!held.empty()) std::cout << "held-out accuracy " << format_fixed(accuracy(tagger, held)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Train or feed the bundled perceptron POS tagger"};
  app.require_subcommand(1);

  app.add_subcommand("tokenize", "Tokenize stdin lines for corpus tagging");

  auto* tag = app.add_subcommand("tag", "Tag stdin lines, one sentence per line");
  std::string model;
  tag->add_option("--model", model)->required();

  auto* train = app.add_subcommand("train", "Train weights from a word<TAB>tag corpus");
  std::string corpus, out;
  int iterations = 5;
  std::uint64_t seed = 1;
  double holdout = 0.05;
  train->add_option("--corpus", corpus)->required();
  train->add_option("--out", out)->required();
  train->add_option("--iterations", iterations);
  train->add_option("--seed", seed);
  train->add_option("--holdout", holdout, "Fraction of sentences (from the end) kept for scoring");

  CLI11_PARSE(app, argc, argv);
  try {
    if (app.got_subcommand("tokenize")) return run_tokenize();
    if (app.got_subcommand("tag")) return run_tag(model);
    return run_train(corpus, out, iterations, seed, holdout);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
