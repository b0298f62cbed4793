#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lexiprof/text.hpp"
#include "oracles.hpp"

using namespace lexiprof;

namespace {

std::vector<std::string> folded(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(text).tokens) out.push_back(t.folded);
  return out;
}

}  // namespace

TEST_CASE("tokenize splits on non-word characters and folds case") {
  CHECK(folded("Hello, World") == std::vector<std::string>{"hello", "world"});
  CHECK(tokenize("").tokens.empty());
  CHECK(tokenize("  ,.;:) ").tokens.empty());
}

TEST_CASE("apostrophes stay inside tokens") {
  const auto expected = oracle::ascii_tokens("don't stop");
  CHECK(expected == std::vector<std::string>{"don't", "stop"});
  CHECK(folded("don't stop") == expected);
  CHECK(folded("it’s") == std::vector<std::string>{"it’s"});
}

TEST_CASE("byte spans point at the surface text") {
  const std::string text = "Hi :) Übermäßig Straße";
  const auto stream = tokenize(text);
  REQUIRE(stream.tokens.size() == 3);
  std::size_t last_end = 0;
  for (const auto& t : stream.tokens) {
    CHECK(t.begin >= last_end);
    CHECK(t.end > t.begin);
    CHECK(text.substr(t.begin, t.end - t.begin) == t.surface);
    CHECK_FALSE(t.folded.empty());
    last_end = t.end;
  }
  CHECK(stream.tokens[1].folded == "übermäßig");
  // Simple case folding keeps ß as a single code point.
  CHECK(stream.tokens[2].folded == "straße");
}

TEST_CASE("non-Latin scripts and digits are word characters") {
  CHECK(folded("Привет МИР 2024") == std::vector<std::string>{"привет", "мир", "2024"});
  CHECK(folded("ΣΟΦΙΑ") == std::vector<std::string>{"σοφια"});
}

TEST_CASE("malformed UTF-8 separates tokens") {
  const std::string text = std::string("ab") + '\xff' + "cd";
  CHECK(folded(text) == std::vector<std::string>{"ab", "cd"});
}

TEST_CASE("tokenizer matches the ASCII character-class oracle on random text") {
  static constexpr std::string_view alphabet = "abcXYZ09' ,.:;)(!?-\t\n";
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    std::string text;
    const std::size_t len = rng() % 40;
    for (std::size_t k = 0; k < len; ++k) text.push_back(alphabet[rng() % alphabet.size()]);
    CHECK(folded(text) == oracle::ascii_tokens(text));
  }
}

TEST_CASE("canonical phrases collapse whitespace and case") {
  CHECK(canonical_phrase("  Machine   LEARNING ") == "machine learning");
  CHECK(canonical_phrase(":)") == "");
  CHECK(fold_case("ABC :)") == "abc :)");
}
