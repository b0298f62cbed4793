#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lexiprof/corpus.hpp"
#include "lexiprof/lexicon.hpp"
#include "lexiprof/scorer.hpp"

namespace lexiprof {

struct CandidateKey {
  MarkerKind kind = MarkerKind::linguistic;
  std::string pattern;

  auto operator<=>(const CandidateKey&) const = default;
  bool operator==(const CandidateKey&) const = default;
};

struct CandidateStats {
  std::uint64_t occurrences = 0;
  std::uint64_t member_support = 0;

  bool operator==(const CandidateStats&) const = default;
};

struct ClassStats {
  std::uint64_t doc_count = 0;  // members
  std::uint64_t post_count = 0;
  std::map<CandidateKey, CandidateStats> markers;

  bool operator==(const ClassStats&) const = default;
};

struct ClassFrequencyTable {
  CharacteristicKind kind = CharacteristicKind::gender;
  std::map<std::string, ClassStats> per_value;
  std::vector<std::string> warnings;

  /// Candidate stats in class `value`; zero when absent.
  CandidateStats stats(const std::string& value, const CandidateKey& key) const;
  /// Every candidate present in any class.
  std::set<CandidateKey> candidates() const;
};

/// Emoticon shapes offered as graphic-marker candidates by default.
const std::vector<std::string>& default_graphic_candidates();

struct TrainerConfig {
  std::uint64_t min_member_support = 3;
  std::uint64_t min_class_posts = 20;
  std::size_t max_phrase_len = 3;
  Rational smoothing = 1;  // add-k
  std::size_t top_k_markers_per_io = 50;
  double weight_floor = 0.01;
  std::vector<std::string> graphic_candidates = default_graphic_candidates();

  /// Throws std::invalid_argument when a field is out of range.
  void check() const;
};

struct WeightedCandidate {
  CandidateKey key;
  double weight = 0;
};

using CandidateWeights = std::map<std::string, std::vector<WeightedCandidate>>;

/// Counts n-gram and graphic candidates per class of `kind`. Members without
/// a label for `kind` are ignored. Throws TooFewClasses.
ClassFrequencyTable extract_candidates(const std::vector<LabeledCorpus>& sample, CharacteristicKind kind,
                                       const TrainerConfig& cfg);

/// Smoothed log-odds of `key` for class `value` against all other classes pooled:
///   ln( ((s_v + k) / (d_v + 2k)) / ((s_rest + k) / (d_rest + 2k)) )
double log_odds(const ClassFrequencyTable& table, const CandidateKey& key, const std::string& value,
                const Rational& smoothing);

/// Positive log-odds weights per class, best first, floored and truncated to top-k.
CandidateWeights weigh_candidates(const ClassFrequencyTable& table, const TrainerConfig& cfg);

/// pattern -> indicator code.
using IndicatorAssignment = std::map<std::string, std::string>;

IndicatorAssignment load_assignment(const std::filesystem::path& path);

/// Replaces `base`'s IOs of `kind` with one IO per (indicator, value) pair of
/// the weighted candidates. Throws InvalidAssignment.
Lexicon assemble_lexicon(const CandidateWeights& weights, CharacteristicKind kind,
                         const IndicatorAssignment& assignment, const Lexicon& base);

struct ValueMetrics {
  std::uint64_t support = 0;    // members labeled with the value
  std::uint64_t predicted = 0;  // members decided as the value
  std::uint64_t correct = 0;
  Rational precision;
  Rational recall;
};

struct KindEvaluation {
  std::uint64_t members = 0;
  std::uint64_t correct = 0;
  std::uint64_t undetermined = 0;
  Rational accuracy;
  Rational undetermined_rate;
  std::map<std::string, ValueMetrics> per_value;
  /// label -> decided value (or "undetermined") -> members
  std::map<std::string, std::map<std::string, std::uint64_t>> confusion;
};

struct EvaluationReport {
  std::map<CharacteristicKind, KindEvaluation> kinds;
};

/// Scores every holdout member and compares decisions with labels.
/// Throws TrainTestOverlap when a holdout member id is in `training_members`.
EvaluationReport holdout_validate(const Lexicon& lex, const std::vector<LabeledCorpus>& holdout,
                                  const ScoreOptions& options,
                                  const std::set<std::string>& training_members = {});

}  // namespace lexiprof
