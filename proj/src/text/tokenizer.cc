#include "reqlint/text/tokenizer.h"

#include <array>
#include <string>

#include "reqlint/common/strings.h"
#include "reqlint/common/utf8.h"

namespace reqlint::text {
namespace {

// Lowercased, without the trailing dot. "no" is left out on purpose: "No."
// ends sentences far more often than it abbreviates "number" in requirements.
constexpr std::array<std::string_view, 28> kAbbreviations = {
    "al",   "approx", "ca",  "cf",  "dept", "dr",  "eq",   "etc", "fig",  "figs",
    "inc",  "incl",   "jr",  "ltd", "mr",   "mrs", "ms",   "nos", "prof", "ref",
    "resp", "sec",    "sr",  "st",  "viz",  "vol", "vols", "vs"};

constexpr std::array<std::string_view, 6> kClitics = {"s", "re", "ve", "ll", "d", "m"};

bool is_abbreviation(std::string_view word) {
  const std::string lower = to_lower(word);
  for (auto a : kAbbreviations) {
    if (a == lower) return true;
  }
  return false;
}

bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }
bool is_hyphen(char32_t cp) { return cp == '-' || cp == 0x2010 || cp == 0x2011; }
bool is_ascii_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::size_t i = 0;
    while (i < text_.size()) {
      const auto d = utf8::decode(text_, i);
      if (utf8::is_space(d.cp)) {
        i += d.length;
        continue;
      }
      if (const std::size_t len = dotted_abbreviation(i)) {
        emit(i, i + len, true);
        i += len;
      } else if (utf8::is_alnum(d.cp)) {
        i = scan_word(i);
      } else {
        i = scan_symbol(i, d);
      }
    }
    return std::move(tokens_);
  }

 private:
  char32_t cp_at(std::size_t pos) const {
    return pos < text_.size() ? utf8::decode(text_, pos).cp : U'\0';
  }
  bool boundary_at(std::size_t pos) const { return !utf8::is_alnum(cp_at(pos)); }

  void emit(std::size_t begin, std::size_t end, bool is_word) {
    Token t;
    t.surface = std::string(text_.substr(begin, end - begin));
    t.span = {begin, end};
    t.is_word = is_word;
    tokens_.push_back(std::move(t));
  }

  // "e.g.", "i.e.", "U.S.": two or more single letters each followed by a dot.
  std::size_t dotted_abbreviation(std::size_t i) const {
    std::size_t j = i;
    int groups = 0;
    while (j + 1 < text_.size() && is_ascii_letter(text_[j]) && text_[j + 1] == '.') {
      j += 2;
      ++groups;
    }
    if (groups >= 2 && boundary_at(j)) return j - i;
    return 0;
  }

  // Returns the length of an ASCII-letter clitic suffix starting right after
  // an apostrophe at `pos`, or 0.
  std::size_t letters_after(std::size_t pos) const {
    std::size_t k = pos;
    while (k < text_.size() && is_ascii_letter(text_[k])) ++k;
    return k - pos;
  }

  std::size_t scan_word(std::size_t i) {
    std::size_t j = i;
    while (j < text_.size()) {
      const auto d = utf8::decode(text_, j);
      if (utf8::is_alnum(d.cp)) {
        j += d.length;
        continue;
      }
      if (is_hyphen(d.cp) && utf8::is_alnum(cp_at(j + d.length))) {
        j += d.length;
        continue;
      }
      if (d.cp == '.' && j > i && utf8::is_digit(cp_at(j - 1)) && utf8::is_digit(cp_at(j + 1))) {
        j += 1;
        continue;
      }
      if (d.cp == ',' && j > i && utf8::is_digit(cp_at(j - 1))) {
        std::size_t k = j + 1;
        while (k < text_.size() && utf8::is_digit(cp_at(k))) ++k;
        if (k - (j + 1) == 3) {
          j = k;
          continue;
        }
        break;
      }
      if (is_apostrophe(d.cp)) {
        const std::size_t after = j + d.length;
        const std::size_t n_letters = letters_after(after);
        const std::string suffix = to_lower(text_.substr(after, n_letters));
        const bool closes = boundary_at(after + n_letters);
        if (closes && suffix == "t" && j - i >= 2 && (text_[j - 1] == 'n' || text_[j - 1] == 'N')) {
          emit(i, j - 1, true);
          emit(j - 1, after + n_letters, true);
          return after + n_letters;
        }
        bool clitic = false;
        for (auto c : kClitics) clitic = clitic || (closes && suffix == c);
        if (clitic) {
          emit(i, j, true);
          emit(j, after + n_letters, true);
          return after + n_letters;
        }
        if (n_letters > 0) {
          j = after;  // o'clock, O'Brien
          continue;
        }
      }
      break;
    }

    // Trailing dot of a known abbreviation or an initial ("J. Smith").
    if (j < text_.size() && text_[j] == '.') {
      const std::string_view word = text_.substr(i, j - i);
      const bool initial = word.size() == 1 && word[0] >= 'A' && word[0] <= 'Z' &&
                           j + 1 < text_.size() && utf8::is_space(cp_at(j + 1));
      if (initial || is_abbreviation(word)) ++j;
    }
    if (j - i == 6 && to_lower(text_.substr(i, 6)) == "cannot") {
      emit(i, i + 3, true);
      emit(i + 3, j, true);
      return j;
    }
    emit(i, j, true);
    return j;
  }

  std::size_t scan_symbol(std::size_t i, utf8::Decoded d) {
    std::size_t j = i + d.length;
    const auto groups_with = [&](char32_t cp) {
      if (d.cp == '.' || d.cp == '!' || d.cp == '?') return cp == '.' || cp == '!' || cp == '?';
      if (d.cp == '-') return cp == '-';
      return false;
    };
    while (j < text_.size()) {
      const auto next = utf8::decode(text_, j);
      if (!groups_with(next.cp)) break;
      j += next.length;
    }
    emit(i, j, false);
    return j;
  }

  std::string_view text_;
  std::vector<Token> tokens_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Scanner(text).run(); }

}  // namespace reqlint::text
