#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexiprof/corpus.hpp"
#include "lexiprof/lexicon.hpp"
#include "lexiprof/matcher.hpp"
#include "lexiprof/rational.hpp"

namespace lexiprof {

/// Default minimum margin between the two best values (1/20).
inline const Rational& default_threshold() {
  static const Rational t(1, 20);
  return t;
}

struct ScoreOptions {
  Rational threshold = default_threshold();
  /// Clamp marker counts to {0, 1} before computing congruence.
  bool binary_counts = false;
};

struct CongruenceScore {
  std::string io_id;
  Rational mu;
};

struct IndicatorScore {
  IndicatorCode indicator;
  CharacteristicValue value;
  Rational score;  // mean congruence of the pair's IOs
};

struct CharacteristicDecision {
  CharacteristicKind kind = CharacteristicKind::gender;
  std::map<std::string, Rational> value_scores;
  std::optional<std::string> decided;  // nullopt: undetermined
  Rational margin;

  bool operator==(const CharacteristicDecision&) const = default;
};

inline constexpr std::string_view kUndetermined = "undetermined";

struct Profile {
  std::string member_id;
  std::vector<CharacteristicDecision> decisions;  // gender, age, sphere
  std::optional<std::string> education;

  const CharacteristicDecision& decision(CharacteristicKind kind) const;

  bool operator==(const Profile&) const = default;
};

/// Degree to which `counts` matches `io`:
///   mu = sum_{j in io, n_j > 0} v_j n_j / (|io| * sum_{j in io} v_j)
/// Throws DanglingMarker when `io` names a marker absent from `counts`.
CongruenceScore congruence(const MarkerCounts& counts, const IndicativeCharacteristic& io);

/// Copy of `counts` with every count clamped to {0, 1}.
MarkerCounts binarize(const MarkerCounts& counts);

/// Mean congruence per (indicator, value) pair that has at least one IO,
/// sorted by kind, indicator letter, value code.
std::vector<IndicatorScore> indicator_scores(const MarkerCounts& counts, const Lexicon& lex);

/// Averages indicator scores per value of `kind` and picks the best value when
/// it is positive and leads the runner-up by at least `threshold`.
/// Throws UnknownKind for education, std::invalid_argument for threshold < 0.
CharacteristicDecision decide(const std::vector<IndicatorScore>& scores, CharacteristicKind kind,
                              const Rational& threshold);

Profile profile(const UserCorpus& corpus, const Lexicon& lex, const ScoreOptions& options = {});
Profile profile(const UserCorpus& corpus, const Lexicon& lex, const MarkerMatcher& matcher,
                const ScoreOptions& options = {});

/// Profiles every member, in member-id order. Members are scored in parallel
/// over `jobs` workers (0: hardware concurrency).
std::vector<Profile> profile_all(const CorpusMap& corpora, const Lexicon& lex, const ScoreOptions& options = {},
                                 unsigned jobs = 0);

}  // namespace lexiprof
