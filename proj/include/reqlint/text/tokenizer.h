#pragma once

#include <string_view>
#include <vector>

#include "reqlint/text/token.h"

namespace reqlint::text {

// Splits UTF-8 text into word and punctuation tokens.
//
//  - hyphenated compounds ("object-oriented") and decimals ("3.5") stay whole
//  - abbreviations ("e.g.", "etc.", "U.S.") and initials ("J.") keep their dot
//  - clitics split Penn-style: "don't" -> "do" "n't", "user's" -> "user" "'s",
//    and "cannot" -> "can" "not"
//  - every other non-space, non-alphanumeric code point is its own token,
//    except runs of '.', '!', '?' and '-' which group ("...", "--")
//
// Tokens are ordered and non-overlapping; every non-whitespace byte of the
// input belongs to exactly one token.
std::vector<Token> tokenize(std::string_view text);

}  // namespace reqlint::text
