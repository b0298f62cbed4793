#include "lexiprof/text.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace lexiprof {

namespace {

constexpr UChar32 kRightSingleQuote = 0x2019;

bool is_word_char(UChar32 c) {
  if (c == '\'' || c == kRightSingleQuote) return true;
  return u_isalpha(c) || u_charType(c) == U_DECIMAL_DIGIT_NUMBER;
}

void append_utf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(buf, len, U8_MAX_LENGTH, c, error);
  if (!error) out.append(buf, static_cast<std::size_t>(len));
}

// Decodes one code point at `pos`, advancing it. Returns a negative value for
// malformed input.
UChar32 next_code_point(std::string_view text, std::size_t& pos) {
  int32_t i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_NEXT(reinterpret_cast<const uint8_t*>(text.data()), i, static_cast<int32_t>(text.size()), c);
  pos = static_cast<std::size_t>(i);
  return c;
}

}  // namespace

TokenStream tokenize(std::string_view text) {
  TokenStream stream;
  std::size_t pos = 0;
  Token current;
  bool in_token = false;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const UChar32 c = next_code_point(text, pos);
    if (c >= 0 && is_word_char(c)) {
      if (!in_token) {
        current = Token{};
        current.begin = start;
        in_token = true;
      }
      append_utf8(current.folded, u_foldCase(c, U_FOLD_CASE_DEFAULT));
      current.end = pos;
    } else if (in_token) {
      current.surface.assign(text.substr(current.begin, current.end - current.begin));
      stream.tokens.push_back(std::move(current));
      in_token = false;
    }
  }
  if (in_token) {
    current.surface.assign(text.substr(current.begin, current.end - current.begin));
    stream.tokens.push_back(std::move(current));
  }
  return stream;
}

std::string canonical_phrase(std::string_view text) {
  std::string out;
  for (const auto& token : tokenize(text).tokens) {
    if (!out.empty()) out.push_back(' ');
    out += token.folded;
  }
  return out;
}

std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const UChar32 c = next_code_point(text, pos);
    if (c < 0) {
      out.append(text.substr(start, pos - start));
    } else {
      append_utf8(out, u_foldCase(c, U_FOLD_CASE_DEFAULT));
    }
  }
  return out;
}

}  // namespace lexiprof
