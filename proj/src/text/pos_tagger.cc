#include "reqlint/text/pos_tagger.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "reqlint/common/error.h"
#include "reqlint/common/random.h"
#include "reqlint/common/strings.h"

namespace reqlint::text {
namespace {

constexpr char kMagic[5] = {'R', 'Q', 'L', 'T', '1'};

std::string normalize(const std::string& word) {
  if (word.find('-') != std::string::npos && word.front() != '-') return "!HYPHEN";
  const bool all_digits =
      !word.empty() && std::all_of(word.begin(), word.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (all_digits && word.size() == 4) return "!YEAR";
  if (!word.empty() && word.front() >= '0' && word.front() <= '9') return "!DIGITS";
  return to_lower(word);
}

std::string suffix3(const std::string& w) { return w.size() <= 3 ? w : w.substr(w.size() - 3); }

std::uint64_t feature_hash(std::string_view name, std::string_view a, std::string_view b = {}) {
  std::uint64_t h = fnv1a64(name);
  h = fnv1a64("\x1f", h);
  h = fnv1a64(a, h);
  if (!b.empty()) {
    h = fnv1a64("\x1f", h);
    h = fnv1a64(b, h);
  }
  return h;
}

// `context` is the normalized sentence padded with two markers on each side;
// `i` indexes the unpadded sentence.
std::vector<std::uint64_t> features(std::size_t i, const std::string& word,
                                    const std::vector<std::string>& context,
                                    const std::string& prev, const std::string& prev2) {
  const std::size_t c = i + 2;
  std::vector<std::uint64_t> f;
  f.reserve(14);
  f.push_back(feature_hash("bias", ""));
  f.push_back(feature_hash("i suffix", suffix3(word)));
  f.push_back(feature_hash("i pref1", word.substr(0, 1)));
  f.push_back(feature_hash("i-1 tag", prev));
  f.push_back(feature_hash("i-2 tag", prev2));
  f.push_back(feature_hash("i tag+i-2 tag", prev, prev2));
  f.push_back(feature_hash("i word", context[c]));
  f.push_back(feature_hash("i-1 tag+i word", prev, context[c]));
  f.push_back(feature_hash("i-1 word", context[c - 1]));
  f.push_back(feature_hash("i-1 suffix", suffix3(context[c - 1])));
  f.push_back(feature_hash("i-2 word", context[c - 2]));
  f.push_back(feature_hash("i+1 word", context[c + 1]));
  f.push_back(feature_hash("i+1 suffix", suffix3(context[c + 1])));
  f.push_back(feature_hash("i+2 word", context[c + 2]));
  return f;
}

std::vector<std::string> padded_context(const std::vector<std::string>& words) {
  std::vector<std::string> ctx;
  ctx.reserve(words.size() + 4);
  ctx.emplace_back("-START-");
  ctx.emplace_back("-START2-");
  for (const auto& w : words) ctx.push_back(normalize(w));
  ctx.emplace_back("-END-");
  ctx.emplace_back("-END2-");
  return ctx;
}

// Averaged-perceptron bookkeeping for one (feature, class) weight.
struct Param {
  std::uint16_t cls;
  double weight = 0;
  double total = 0;
  std::uint64_t stamp = 0;
};

class Trainer {
 public:
  explicit Trainer(std::size_t n_classes) : n_classes_(n_classes) {}

  std::uint16_t predict(const std::vector<std::uint64_t>& feats) const {
    std::vector<double> scores(n_classes_, 0.0);
    for (auto f : feats) {
      auto it = params_.find(f);
      if (it == params_.end()) continue;
      for (const auto& p : it->second) scores[p.cls] += p.weight;
    }
    return static_cast<std::uint16_t>(std::max_element(scores.begin(), scores.end()) - scores.begin());
  }

  void update(std::uint16_t truth, std::uint16_t guess, const std::vector<std::uint64_t>& feats) {
    ++instances_;
    if (truth == guess) return;
    for (auto f : feats) {
      auto& list = params_[f];
      bump(list, truth, 1.0);
      bump(list, guess, -1.0);
    }
  }

  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint16_t, float>>> averaged(
      float prune_below) const {
    std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint16_t, float>>> out;
    const double n = static_cast<double>(std::max<std::uint64_t>(instances_, 1));
    for (const auto& [f, list] : params_) {
      std::vector<std::pair<std::uint16_t, float>> kept;
      for (const auto& p : list) {
        const double total = p.total + static_cast<double>(instances_ - p.stamp) * p.weight;
        const float avg = static_cast<float>(total / n);
        if (std::abs(avg) >= prune_below) kept.emplace_back(p.cls, avg);
      }
      if (kept.empty()) continue;
      std::sort(kept.begin(), kept.end());
      out.emplace(f, std::move(kept));
    }
    return out;
  }

 private:
  void bump(std::vector<Param>& list, std::uint16_t cls, double delta) {
    auto it = std::find_if(list.begin(), list.end(), [&](const Param& p) { return p.cls == cls; });
    if (it == list.end()) {
      list.push_back(Param{cls, 0, 0, instances_});
      it = list.end() - 1;
    }
    it->total += static_cast<double>(instances_ - it->stamp) * it->weight;
    it->stamp = instances_;
    it->weight += delta;
  }

  std::size_t n_classes_;
  std::uint64_t instances_ = 0;
  std::unordered_map<std::uint64_t, std::vector<Param>> params_;
};

class Writer {
 public:
  void bytes(const void* data, std::size_t n) { out_.append(static_cast<const char*>(data), n); }
  void u16(std::uint16_t v) {
    for (int i = 0; i < 2; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void f32(float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    u32(bits);
  }
  void str(const std::string& s) {
    if (s.size() > 0xFFFF) raise(ErrorCode::kInvalidArgs, "string too long for tagger file");
    u16(static_cast<std::uint16_t>(s.size()));
    bytes(s.data(), s.size());
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  std::string_view bytes(std::size_t n) {
    if (pos_ + n > in_.size()) raise(ErrorCode::kFormatError, "tagger file truncated");
    auto s = in_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::uint64_t uint(int width) {
    auto b = bytes(static_cast<std::size_t>(width));
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
    return v;
  }
  std::uint16_t u16() { return static_cast<std::uint16_t>(uint(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(uint(4)); }
  std::uint64_t u64() { return uint(8); }
  float f32() {
    const std::uint32_t bits = u32();
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
  }
  std::string str() {
    const auto n = u16();
    return std::string(bytes(n));
  }
  bool done() const { return pos_ == in_.size(); }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<TaggedSentence> parse_tagged_corpus(std::string_view text) {
  std::vector<TaggedSentence> out;
  TaggedSentence current;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    const auto line = trim(raw);
    if (!line.empty() && line.front() == '#' && line.find('\t') == std::string_view::npos) continue;
    if (line.empty()) {
      if (!current.words.empty()) out.push_back(std::move(current));
      current = {};
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size()) {
      throw Error(ErrorCode::kFormatError, "expected word<TAB>tag", line_no);
    }
    std::string tag(line.substr(tab + 1));
    if (auto bar = tag.find('|'); bar != std::string::npos) tag.resize(bar);
    current.words.emplace_back(line.substr(0, tab));
    current.tags.push_back(std::move(tag));
  }
  if (!current.words.empty()) out.push_back(std::move(current));
  return out;
}

PerceptronTagger PerceptronTagger::train(const std::vector<TaggedSentence>& sentences,
                                         const TaggerTrainingOptions& options) {
  PerceptronTagger tagger;
  std::set<std::string> class_set;
  std::map<std::string, std::map<std::string, int>> counts;
  for (const auto& s : sentences) {
    if (s.words.size() != s.tags.size()) raise(ErrorCode::kLengthMismatch, "words and tags differ in length");
    for (std::size_t i = 0; i < s.words.size(); ++i) {
      class_set.insert(s.tags[i]);
      ++counts[s.words[i]][s.tags[i]];
    }
  }
  if (class_set.empty()) raise(ErrorCode::kEmptyDataset, "no tagged tokens");
  tagger.classes_.assign(class_set.begin(), class_set.end());
  std::unordered_map<std::string, std::uint16_t> class_index;
  for (std::size_t i = 0; i < tagger.classes_.size(); ++i) {
    class_index[tagger.classes_[i]] = static_cast<std::uint16_t>(i);
  }

  for (const auto& [word, by_tag] : counts) {
    int total = 0;
    int best = 0;
    const std::string* best_tag = nullptr;
    for (const auto& [tag, n] : by_tag) {
      total += n;
      if (n > best) {
        best = n;
        best_tag = &tag;
      }
    }
    if (total >= options.tagdict_min_count &&
        static_cast<double>(best) / total >= options.tagdict_min_share) {
      tagger.tagdict_[word] = class_index.at(*best_tag);
    }
  }

  Trainer trainer(tagger.classes_.size());
  std::vector<std::size_t> order(sentences.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(options.seed);
  for (int iter = 0; iter < options.iterations; ++iter) {
    rng.shuffle(order);
    for (std::size_t idx : order) {
      const auto& s = sentences[idx];
      const auto context = padded_context(s.words);
      std::string prev = "-START-";
      std::string prev2 = "-START2-";
      for (std::size_t i = 0; i < s.words.size(); ++i) {
        std::uint16_t guess;
        if (auto it = tagger.tagdict_.find(s.words[i]); it != tagger.tagdict_.end()) {
          guess = it->second;
        } else {
          const auto feats = features(i, s.words[i], context, prev, prev2);
          guess = trainer.predict(feats);
          trainer.update(class_index.at(s.tags[i]), guess, feats);
        }
        prev2 = prev;
        prev = tagger.classes_[guess];
      }
    }
  }
  tagger.weights_ = trainer.averaged(options.prune_below);
  return tagger;
}

std::uint16_t PerceptronTagger::predict(const std::vector<std::uint64_t>& feats) const {
  std::vector<double> scores(classes_.size(), 0.0);
  for (auto f : feats) {
    auto it = weights_.find(f);
    if (it == weights_.end()) continue;
    for (const auto& [cls, w] : it->second) scores[cls] += w;
  }
  return static_cast<std::uint16_t>(std::max_element(scores.begin(), scores.end()) - scores.begin());
}

std::vector<std::string> PerceptronTagger::tag(const std::vector<std::string>& words) const {
  std::vector<std::string> tags;
  tags.reserve(words.size());
  const auto context = padded_context(words);
  std::string prev = "-START-";
  std::string prev2 = "-START2-";
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint16_t cls;
    if (auto it = tagdict_.find(words[i]); it != tagdict_.end()) {
      cls = it->second;
    } else {
      cls = predict(features(i, words[i], context, prev, prev2));
    }
    tags.push_back(classes_[cls]);
    prev2 = prev;
    prev = tags.back();
  }
  return tags;
}

void PerceptronTagger::tag(std::vector<Token>& tokens, std::size_t first, std::size_t last) const {
  std::vector<std::string> words;
  for (std::size_t i = first; i < last; ++i) words.push_back(tokens[i].surface);
  auto tags = tag(words);
  for (std::size_t i = first; i < last; ++i) tokens[i].tag = std::move(tags[i - first]);
}

std::string PerceptronTagger::serialize() const {
  Writer w;
  w.bytes(kMagic, sizeof kMagic);
  w.u32(kFormatVersion);
  w.u32(static_cast<std::uint32_t>(classes_.size()));
  for (const auto& c : classes_) w.str(c);

  std::vector<std::pair<std::string, std::uint16_t>> dict(tagdict_.begin(), tagdict_.end());
  std::sort(dict.begin(), dict.end());
  w.u32(static_cast<std::uint32_t>(dict.size()));
  for (const auto& [word, cls] : dict) {
    w.str(word);
    w.u16(cls);
  }

  std::vector<std::uint64_t> keys;
  keys.reserve(weights_.size());
  for (const auto& kv : weights_) keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end());
  w.u32(static_cast<std::uint32_t>(keys.size()));
  for (auto k : keys) {
    const auto& list = weights_.at(k);
    w.u64(k);
    w.u16(static_cast<std::uint16_t>(list.size()));
    for (const auto& [cls, weight] : list) {
      w.u16(cls);
      w.f32(weight);
    }
  }
  return w.take();
}

PerceptronTagger PerceptronTagger::deserialize(std::string_view bytes) {
  Reader r(bytes);
  if (r.bytes(sizeof kMagic) != std::string_view(kMagic, sizeof kMagic)) {
    raise(ErrorCode::kFormatError, "not a tagger weight file (bad magic)");
  }
  if (const auto version = r.u32(); version != kFormatVersion) {
    raise(ErrorCode::kFormatError, "unsupported tagger file version " + std::to_string(version));
  }
  PerceptronTagger t;
  const auto n_classes = r.u32();
  for (std::uint32_t i = 0; i < n_classes; ++i) t.classes_.push_back(r.str());
  if (t.classes_.empty()) raise(ErrorCode::kFormatError, "tagger file has no classes");
  const auto check_class = [&](std::uint16_t cls) {
    if (cls >= t.classes_.size()) raise(ErrorCode::kFormatError, "class index out of range");
    return cls;
  };
  const auto n_dict = r.u32();
  for (std::uint32_t i = 0; i < n_dict; ++i) {
    auto word = r.str();
    t.tagdict_[std::move(word)] = check_class(r.u16());
  }
  const auto n_features = r.u32();
  t.weights_.reserve(n_features);
  for (std::uint32_t i = 0; i < n_features; ++i) {
    const auto key = r.u64();
    const auto n = r.u16();
    Weights list;
    list.reserve(n);
    for (std::uint16_t j = 0; j < n; ++j) {
      const auto cls = check_class(r.u16());
      list.emplace_back(cls, r.f32());
    }
    t.weights_.emplace(key, std::move(list));
  }
  if (!r.done()) raise(ErrorCode::kFormatError, "trailing bytes in tagger file");
  return t;
}

std::shared_ptr<const PerceptronTagger> PerceptronTagger::load(const std::filesystem::path& path) {
  return std::make_shared<const PerceptronTagger>(deserialize(read_file(path)));
}

std::shared_ptr<const PerceptronTagger> PerceptronTagger::default_instance() {
  static const std::shared_ptr<const PerceptronTagger> instance =
      load(resource_path("tagger/en-perceptron.bin"));
  return instance;
}

void PerceptronTagger::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::kIoError, "cannot write " + path.string());
  const auto bytes = serialize();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) raise(ErrorCode::kIoError, "write failed: " + path.string());
}

}  // namespace reqlint::text
