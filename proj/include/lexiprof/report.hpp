#pragma once

#include <string>
#include <vector>

#include "lexiprof/lexicon.hpp"
#include "lexiprof/matcher.hpp"
#include "lexiprof/scorer.hpp"
#include "lexiprof/trainer.hpp"
#include "lexiprof/verifier.hpp"

namespace lexiprof {

/// Fractional digits of every decimal in a report.
inline constexpr int kReportDigits = 6;

std::string render_profiles_json(const std::vector<Profile>& profiles);
std::string render_profiles_text(const std::vector<Profile>& profiles);

std::string render_verification_json(const VerificationBatch& batch);
std::string render_verification_text(const VerificationBatch& batch);

std::string render_evaluation_json(const EvaluationReport& report);
std::string render_evaluation_text(const EvaluationReport& report);

/// One `{post_id, marker_id, byte_span}` object per line.
std::string render_match_events_jsonl(const std::string& member_id, const std::vector<MatchEvent>& events);

std::string render_violations_json(const std::vector<Violation>& violations);

}  // namespace lexiprof
