#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexiprof/corpus.hpp"
#include "lexiprof/lexicon.hpp"
#include "lexiprof/scorer.hpp"

namespace lexiprof {

enum class VerdictStatus { confirmed, contradicted, unverifiable, undeclared };

inline constexpr std::array<VerdictStatus, 4> kAllStatuses = {
    VerdictStatus::confirmed, VerdictStatus::contradicted, VerdictStatus::unverifiable,
    VerdictStatus::undeclared};

std::string_view to_string(VerdictStatus status);

struct KindVerdict {
  CharacteristicKind kind = CharacteristicKind::gender;
  std::optional<std::string> declared;
  std::optional<std::string> computed;  // nullopt: undetermined
  VerdictStatus status = VerdictStatus::undeclared;
  Rational margin;

  bool operator==(const KindVerdict&) const = default;
};

struct Verdict {
  std::string member_id;
  std::vector<KindVerdict> per_kind;  // gender, age, sphere, education
  std::optional<std::string> diagnostic;

  const KindVerdict& at(CharacteristicKind kind) const;

  bool operator==(const Verdict&) const = default;
};

struct VerificationSummary {
  std::uint64_t members = 0;
  std::map<CharacteristicKind, std::map<VerdictStatus, std::uint64_t>> tallies;

  bool operator==(const VerificationSummary&) const = default;
};

struct VerificationBatch {
  std::vector<Verdict> verdicts;  // member-id order
  VerificationSummary summary;
};

/// Status of one kind from a declaration and a decision.
VerdictStatus classify(const std::optional<std::string>& declared, const std::optional<std::string>& computed);

/// Compares a computed profile with the member's declarations.
Verdict verdict_from_profile(const UserCorpus& corpus, const Profile& profile);

Verdict verify(const UserCorpus& corpus, const Lexicon& lex, const ScoreOptions& options = {});

/// Verifies every member; scoring failures become `unverifiable` verdicts
/// carrying a diagnostic.
VerificationBatch verify_batch(const CorpusMap& corpora, const Lexicon& lex, const ScoreOptions& options = {},
                               unsigned jobs = 0);

}  // namespace lexiprof
