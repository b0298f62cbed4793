#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lexiprof {

struct Token {
  std::string surface;
  std::string folded;
  std::size_t begin = 0;  // byte offsets into the source text
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

struct TokenStream {
  std::vector<Token> tokens;

  bool operator==(const TokenStream&) const = default;
};

/// Splits `text` into maximal runs of Unicode letters, decimal digits and
/// apostrophes (U+0027, U+2019). Each token carries its simple case fold.
/// Malformed UTF-8 bytes act as separators.
TokenStream tokenize(std::string_view text);

/// Folded tokens of `text` joined by single spaces; the canonical spelling
/// of a linguistic marker pattern.
std::string canonical_phrase(std::string_view text);

/// Simple Unicode case fold of a whole string (no tokenization).
std::string fold_case(std::string_view text);

}  // namespace lexiprof
