#include "lexiprof/scorer.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "parallel.hpp"

namespace lexiprof {

const CharacteristicDecision& Profile::decision(CharacteristicKind kind) const {
  for (const auto& d : decisions) {
    if (d.kind == kind) return d;
  }
  throw UnknownKind("profile has no decision for " + std::string(to_string(kind)));
}

CongruenceScore congruence(const MarkerCounts& counts, const IndicativeCharacteristic& io) {
  Rational numerator = 0;
  Rational weight_sum = 0;
  for (const auto& wm : io.markers) {
    auto it = counts.counts.find(wm.marker_id);
    if (it == counts.counts.end()) {
      throw DanglingMarker(io.id + " references unknown marker '" + wm.marker_id + "'");
    }
    weight_sum += wm.weight;
    if (it->second > 0) numerator += wm.weight * Rational(mpz_class(std::to_string(it->second)));
  }
  CongruenceScore out{io.id, 0};
  if (io.markers.empty() || sgn(weight_sum) == 0) return out;
  out.mu = numerator / (Rational(static_cast<unsigned long>(io.markers.size())) * weight_sum);
  return out;
}

MarkerCounts binarize(const MarkerCounts& counts) {
  MarkerCounts out = counts;
  for (auto& [_, n] : out.counts) n = n > 0 ? 1 : 0;
  for (auto& [_, post] : out.per_post) {
    for (auto& [__, n] : post) n = n > 0 ? 1 : 0;
  }
  return out;
}

std::vector<IndicatorScore> indicator_scores(const MarkerCounts& counts, const Lexicon& lex) {
  struct Accumulator {
    const IndicatorCode* indicator;
    const CharacteristicValue* value;
    Rational sum;
    unsigned long n = 0;
  };
  std::map<std::tuple<CharacteristicKind, char, std::string>, Accumulator> groups;
  for (const auto& io : lex.ios) {
    const IndicatorCode* ind = lex.find_indicator(io.indicator);
    if (ind == nullptr) throw ValidationError(io.id + " references unknown indicator '" + io.indicator + "'");
    const CharacteristicValue* value = lex.find_value(ind->kind, io.value);
    if (value == nullptr) throw ValidationError(io.id + " references unknown value '" + io.value + "'");
    auto& acc = groups[{ind->kind, ind->letter(), value->code}];
    acc.indicator = ind;
    acc.value = value;
    acc.sum += congruence(counts, io).mu;
    ++acc.n;
  }
  std::vector<IndicatorScore> out;
  out.reserve(groups.size());
  for (auto& [_, acc] : groups) {
    out.push_back({*acc.indicator, *acc.value, acc.sum / Rational(acc.n)});
  }
  return out;
}

CharacteristicDecision decide(const std::vector<IndicatorScore>& scores, CharacteristicKind kind,
                              const Rational& threshold) {
  if (!is_scoreable(kind)) throw UnknownKind(std::string(to_string(kind)) + " is never scored");
  if (sgn(threshold) < 0) throw std::invalid_argument("decision threshold must be non-negative");

  std::map<std::string, std::pair<Rational, unsigned long>> sums;
  for (const auto& s : scores) {
    if (s.value.kind != kind) continue;
    auto& [sum, n] = sums[s.value.code];
    sum += s.score;
    ++n;
  }

  CharacteristicDecision out;
  out.kind = kind;
  for (auto& [code, acc] : sums) out.value_scores.emplace(code, acc.first / Rational(acc.second));

  const std::string* top_code = nullptr;
  Rational top = 0;
  Rational second = 0;
  bool have_second = false;
  for (const auto& [code, score] : out.value_scores) {
    if (top_code == nullptr) {
      top_code = &code;
      top = score;
    } else if (score > top) {
      second = top;
      have_second = true;
      top_code = &code;
      top = score;
    } else if (!have_second || score > second) {
      second = score;
      have_second = true;
    }
  }
  out.margin = have_second ? Rational(top - second) : Rational(0);
  const bool tie = have_second && top == second;
  if (top_code != nullptr && sgn(top) > 0 && !tie && out.margin >= threshold) out.decided = *top_code;
  return out;
}

Profile profile(const UserCorpus& corpus, const Lexicon& lex, const MarkerMatcher& matcher,
                const ScoreOptions& options) {
  MarkerCounts counts = matcher.count(corpus);
  if (options.binary_counts) counts = binarize(counts);
  const auto scores = indicator_scores(counts, lex);

  Profile out;
  out.member_id = corpus.member_id;
  for (auto kind : kScoreableKinds) out.decisions.push_back(decide(scores, kind, options.threshold));
  if (corpus.declared) {
    if (auto it = corpus.declared->declared.find(CharacteristicKind::education);
        it != corpus.declared->declared.end()) {
      out.education = it->second;
    }
  }
  return out;
}

Profile profile(const UserCorpus& corpus, const Lexicon& lex, const ScoreOptions& options) {
  return profile(corpus, lex, MarkerMatcher(lex), options);
}

std::vector<Profile> profile_all(const CorpusMap& corpora, const Lexicon& lex, const ScoreOptions& options,
                                 unsigned jobs) {
  const MarkerMatcher matcher(lex);
  std::vector<const UserCorpus*> members;
  members.reserve(corpora.size());
  for (const auto& [_, c] : corpora) members.push_back(&c);
  std::vector<Profile> out(members.size());
  detail::parallel_for(members.size(), jobs,
                       [&](std::size_t i) { out[i] = profile(*members[i], lex, matcher, options); });
  return out;
}

}  // namespace lexiprof
