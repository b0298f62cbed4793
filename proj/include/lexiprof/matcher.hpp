#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexiprof/corpus.hpp"
#include "lexiprof/lexicon.hpp"
#include "lexiprof/text.hpp"

namespace lexiprof {

/// Marker occurrence counts of one member after match regulations.
struct MarkerCounts {
  std::string member_id;
  /// Every lexicon marker, zero included.
  std::map<std::string, std::uint64_t> counts;
  /// post_id -> marker_id -> count; only non-zero entries are stored.
  std::map<std::string, std::map<std::string, std::uint64_t>> per_post;

  bool operator==(const MarkerCounts&) const = default;
};

struct MatchEvent {
  std::string post_id;
  std::string marker_id;
  std::size_t begin = 0;  // byte span in the post text
  std::size_t end = 0;

  bool operator==(const MatchEvent&) const = default;
};

/// Lexicon markers compiled for repeated counting. Holds no reference to the
/// lexicon it was built from.
class MarkerMatcher {
 public:
  explicit MarkerMatcher(const Lexicon& lex);

  /// Counts every marker over `corpus`. When `events` is given, each counted
  /// occurrence is appended to it.
  MarkerCounts count(const UserCorpus& corpus, std::vector<MatchEvent>* events = nullptr) const;

  /// Raw occurrence counts of every marker in one text, before regulations.
  /// Indexed like the lexicon's marker list.
  std::vector<std::uint64_t> count_text(std::string_view text, const std::string& post_id,
                                        std::vector<MatchEvent>* events) const;

 private:
  struct Compiled {
    std::string id;
    MarkerKind kind;
    MatchRegulations regulations;
    std::string pattern;
    std::vector<std::string> tokens;  // whole-token linguistic markers
  };

  std::vector<Compiled> markers_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_first_token_;
  std::vector<std::size_t> substring_markers_;
  std::vector<std::size_t> graphic_markers_;
};

MarkerCounts count_markers(const UserCorpus& corpus, const Lexicon& lex);

/// Ids of markers with a positive count.
std::set<std::string> marker_list(const MarkerCounts& counts);

/// Non-overlapping, leftmost-first occurrences of `needle` in `haystack`.
std::uint64_t count_literal(std::string_view haystack, std::string_view needle);

}  // namespace lexiprof
