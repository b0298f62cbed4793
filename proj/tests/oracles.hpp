#pragma once

// Independent reference implementations used only by tests. They share no
// code with the library's scoring, matching or tokenizing paths.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lexiprof::oracle {

using BigRational = boost::multiprecision::cpp_rational;

struct Term {
  std::int64_t weight_num;
  std::int64_t weight_den;
  std::uint64_t count;
};

/// Congruence evaluated term by term:
///   numerator   = sum over terms with count > 0 of weight * count
///   denominator = (number of terms) * (sum of all weights)
inline BigRational congruence(const std::vector<Term>& terms) {
  BigRational numerator = 0;
  BigRational weight_sum = 0;
  for (const auto& t : terms) {
    const BigRational w(t.weight_num, t.weight_den);
    weight_sum += w;
    if (t.count > 0) numerator += w * BigRational(t.count);
  }
  if (terms.empty() || weight_sum == 0) return 0;
  return numerator / (BigRational(terms.size()) * weight_sum);
}

/// ASCII character-class tokenizer: letters, digits and `'` form tokens,
/// everything else separates; letters are lowercased.
inline std::vector<std::string> ascii_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    const bool word = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '\'';
    if (word) {
      cur.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// Non-overlapping leftmost occurrences of a token sequence.
inline std::uint64_t count_sequence(const std::vector<std::string>& tokens, const std::vector<std::string>& pattern) {
  std::uint64_t n = 0;
  std::size_t i = 0;
  while (!pattern.empty() && i + pattern.size() <= tokens.size()) {
    bool hit = true;
    for (std::size_t k = 0; k < pattern.size(); ++k) hit = hit && tokens[i + k] == pattern[k];
    if (hit) {
      ++n;
      i += pattern.size();
    } else {
      ++i;
    }
  }
  return n;
}

}  // namespace lexiprof::oracle
