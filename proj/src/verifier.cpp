#include "lexiprof/verifier.hpp"

#include "parallel.hpp"

namespace lexiprof {

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::confirmed:
      return "confirmed";
    case VerdictStatus::contradicted:
      return "contradicted";
    case VerdictStatus::unverifiable:
      return "unverifiable";
    case VerdictStatus::undeclared:
      return "undeclared";
  }
  return "?";
}

const KindVerdict& Verdict::at(CharacteristicKind kind) const {
  for (const auto& v : per_kind) {
    if (v.kind == kind) return v;
  }
  throw UnknownKind("verdict has no entry for " + std::string(to_string(kind)));
}

VerdictStatus classify(const std::optional<std::string>& declared, const std::optional<std::string>& computed) {
  if (!declared) return VerdictStatus::undeclared;
  if (!computed) return VerdictStatus::unverifiable;
  return *declared == *computed ? VerdictStatus::confirmed : VerdictStatus::contradicted;
}

namespace {

std::optional<std::string> declared_value(const UserCorpus& corpus, CharacteristicKind kind) {
  if (!corpus.declared) return std::nullopt;
  auto it = corpus.declared->declared.find(kind);
  if (it == corpus.declared->declared.end()) return std::nullopt;
  return it->second;
}

}  // namespace

Verdict verdict_from_profile(const UserCorpus& corpus, const Profile& profile) {
  Verdict out;
  out.member_id = corpus.member_id;
  for (auto kind : kAllKinds) {
    KindVerdict v;
    v.kind = kind;
    v.declared = declared_value(corpus, kind);
    if (is_scoreable(kind)) {
      const auto& d = profile.decision(kind);
      v.computed = d.decided;
      v.margin = d.margin;
    }
    v.status = classify(v.declared, v.computed);
    out.per_kind.push_back(std::move(v));
  }
  return out;
}

Verdict verify(const UserCorpus& corpus, const Lexicon& lex, const ScoreOptions& options) {
  return verdict_from_profile(corpus, profile(corpus, lex, options));
}

VerificationBatch verify_batch(const CorpusMap& corpora, const Lexicon& lex, const ScoreOptions& options,
                               unsigned jobs) {
  const MarkerMatcher matcher(lex);
  std::vector<const UserCorpus*> members;
  members.reserve(corpora.size());
  for (const auto& [_, c] : corpora) members.push_back(&c);

  VerificationBatch batch;
  batch.verdicts.resize(members.size());
  detail::parallel_for(members.size(), jobs, [&](std::size_t i) {
    const UserCorpus& corpus = *members[i];
    try {
      batch.verdicts[i] = verdict_from_profile(corpus, profile(corpus, lex, matcher, options));
    } catch (const std::exception& e) {
      Verdict v;
      v.member_id = corpus.member_id;
      v.diagnostic = e.what();
      for (auto kind : kAllKinds) {
        KindVerdict kv;
        kv.kind = kind;
        kv.declared = declared_value(corpus, kind);
        kv.status = classify(kv.declared, std::nullopt);
        v.per_kind.push_back(std::move(kv));
      }
      batch.verdicts[i] = std::move(v);
    }
  });

  batch.summary.members = batch.verdicts.size();
  for (auto kind : kAllKinds) {
    auto& tally = batch.summary.tallies[kind];
    for (auto status : kAllStatuses) tally[status] = 0;
  }
  for (const auto& v : batch.verdicts) {
    for (const auto& kv : v.per_kind) ++batch.summary.tallies[kv.kind][kv.status];
  }
  return batch;
}

}  // namespace lexiprof
