#include "lexiprof/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <unordered_map>

#include "json_util.hpp"
#include "lexiprof/matcher.hpp"
#include "lexiprof/taxonomy.hpp"
#include "lexiprof/text.hpp"
#include "parallel.hpp"

namespace lexiprof {

namespace {

using MemberCounts = std::map<CandidateKey, std::uint64_t>;

// Non-overlapping occurrence counts of every n-gram and graphic candidate in
// one member's posts.
MemberCounts count_member(const UserCorpus& corpus, const TrainerConfig& cfg) {
  MemberCounts out;
  for (const auto& post : corpus.posts) {
    const auto tokens = tokenize(post.text).tokens;
    for (std::size_t n = 1; n <= cfg.max_phrase_len; ++n) {
      struct Seen {
        std::uint64_t count = 0;
        std::size_t next_free = 0;
      };
      std::unordered_map<std::string, Seen> seen;
      for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        std::string gram = tokens[i].folded;
        for (std::size_t k = 1; k < n; ++k) {
          gram.push_back(' ');
          gram += tokens[i + k].folded;
        }
        auto& s = seen[gram];
        if (i < s.next_free) continue;
        ++s.count;
        s.next_free = i + n;
      }
      for (auto& [gram, s] : seen) out[{MarkerKind::linguistic, gram}] += s.count;
    }
    for (const auto& pattern : cfg.graphic_candidates) {
      if (auto n = count_literal(post.text, pattern); n > 0) out[{MarkerKind::graphic, pattern}] += n;
    }
  }
  return out;
}

std::string marker_id_for(const CandidateKey& key) {
  return (key.kind == MarkerKind::linguistic ? "w:" : "g:") + key.pattern;
}

}  // namespace

const std::vector<std::string>& default_graphic_candidates() {
  static const std::vector<std::string> patterns = {":)", ":(", ":D", ";)", ":-)", ":-(", ":P",
                                                    "xD", ")))", "(((", "<3", "!!!"};
  return patterns;
}

void TrainerConfig::check() const {
  if (min_member_support < 1) throw std::invalid_argument("min_member_support must be at least 1");
  if (min_class_posts < 1) throw std::invalid_argument("min_class_posts must be at least 1");
  if (max_phrase_len < 1) throw std::invalid_argument("max_phrase_len must be at least 1");
  if (top_k_markers_per_io < 1) throw std::invalid_argument("top_k_markers_per_io must be at least 1");
  if (sgn(smoothing) <= 0) throw std::invalid_argument("smoothing must be positive");
}

CandidateStats ClassFrequencyTable::stats(const std::string& value, const CandidateKey& key) const {
  auto cls = per_value.find(value);
  if (cls == per_value.end()) return {};
  auto it = cls->second.markers.find(key);
  return it == cls->second.markers.end() ? CandidateStats{} : it->second;
}

std::set<CandidateKey> ClassFrequencyTable::candidates() const {
  std::set<CandidateKey> out;
  for (const auto& [_, cls] : per_value) {
    for (const auto& [key, __] : cls.markers) out.insert(key);
  }
  return out;
}

ClassFrequencyTable extract_candidates(const std::vector<LabeledCorpus>& sample, CharacteristicKind kind,
                                       const TrainerConfig& cfg) {
  cfg.check();
  std::vector<const LabeledCorpus*> members;
  for (const auto& m : sample) {
    if (m.labels.contains(kind)) members.push_back(&m);
  }

  ClassFrequencyTable table;
  table.kind = kind;
  for (const auto* m : members) {
    auto& cls = table.per_value[m->labels.at(kind)];
    ++cls.doc_count;
    cls.post_count += m->corpus.posts.size();
  }
  if (table.per_value.size() < 2) {
    throw TooFewClasses("training sample has " + std::to_string(table.per_value.size()) + " " +
                        std::string(to_string(kind)) + " class(es); at least 2 are required");
  }

  std::vector<MemberCounts> counts(members.size());
  detail::parallel_for(members.size(), 0, [&](std::size_t i) { counts[i] = count_member(members[i]->corpus, cfg); });

  for (std::size_t i = 0; i < members.size(); ++i) {
    auto& cls = table.per_value[members[i]->labels.at(kind)];
    for (const auto& [key, n] : counts[i]) {
      auto& s = cls.markers[key];
      s.occurrences += n;
      ++s.member_support;
    }
  }

  std::set<CandidateKey> keep;
  for (const auto& [_, cls] : table.per_value) {
    for (const auto& [key, s] : cls.markers) {
      if (s.member_support >= cfg.min_member_support) keep.insert(key);
    }
  }
  for (auto& [_, cls] : table.per_value) {
    std::erase_if(cls.markers, [&](const auto& entry) { return !keep.contains(entry.first); });
  }

  for (const auto& [code, cls] : table.per_value) {
    if (cls.post_count < cfg.min_class_posts) {
      table.warnings.push_back("class " + code + " has " + std::to_string(cls.post_count) +
                               " posts (minimum " + std::to_string(cfg.min_class_posts) + ")");
    }
  }
  return table;
}

double log_odds(const ClassFrequencyTable& table, const CandidateKey& key, const std::string& value,
                const Rational& smoothing) {
  Rational support_in = 0, docs_in = 0, support_out = 0, docs_out = 0;
  for (const auto& [code, cls] : table.per_value) {
    const auto s = table.stats(code, key);
    const Rational support(static_cast<unsigned long>(s.member_support));
    const Rational docs(static_cast<unsigned long>(cls.doc_count));
    if (code == value) {
      support_in += support;
      docs_in += docs;
    } else {
      support_out += support;
      docs_out += docs;
    }
  }
  const Rational two_k = 2 * smoothing;
  const Rational rate_in = (support_in + smoothing) / (docs_in + two_k);
  const Rational rate_out = (support_out + smoothing) / (docs_out + two_k);
  const Rational ratio = rate_in / rate_out;
  return std::log(ratio.get_d());
}

CandidateWeights weigh_candidates(const ClassFrequencyTable& table, const TrainerConfig& cfg) {
  cfg.check();
  const auto candidates = table.candidates();
  CandidateWeights out;
  for (const auto& [value, _] : table.per_value) {
    auto& list = out[value];
    for (const auto& key : candidates) {
      const double w = log_odds(table, key, value, cfg.smoothing);
      if (w > 0 && w >= cfg.weight_floor) list.push_back({key, w});
    }
    std::sort(list.begin(), list.end(), [](const WeightedCandidate& a, const WeightedCandidate& b) {
      if (a.weight != b.weight) return a.weight > b.weight;
      return a.key < b.key;
    });
    if (list.size() > cfg.top_k_markers_per_io) list.resize(cfg.top_k_markers_per_io);
  }
  return out;
}

IndicatorAssignment load_assignment(const std::filesystem::path& path) {
  const auto doc = detail::parse_json(detail::read_file(path));
  if (!doc.is_object()) throw ParseError("assignment: expected an object of pattern -> indicator code", 0);
  IndicatorAssignment out;
  for (const auto& [pattern, code] : doc.items()) {
    if (!code.is_string()) throw ParseError("assignment['" + pattern + "']: expected an indicator code", 0);
    out.emplace(pattern, code.get<std::string>());
  }
  return out;
}

Lexicon assemble_lexicon(const CandidateWeights& weights, CharacteristicKind kind,
                         const IndicatorAssignment& assignment, const Lexicon& base) {
  if (!is_scoreable(kind)) throw UnknownKind(std::string(to_string(kind)) + " cannot be trained");
  Lexicon lex = base;
  lex.version = base.version + "+" + std::string(to_string(kind));

  std::erase_if(lex.ios, [&](const IndicativeCharacteristic& io) {
    const IndicatorCode* ind = base.find_indicator(io.indicator);
    return ind != nullptr && ind->kind == kind;
  });

  std::map<CandidateKey, std::string> ids;
  for (const auto& m : lex.markers) ids.try_emplace({m.kind, m.pattern}, m.id);
  std::set<std::string> taken;
  for (const auto& m : lex.markers) taken.insert(m.id);

  std::map<std::string, IndicativeCharacteristic> ios;
  for (const auto& [value, list] : weights) {
    if (lex.find_value(kind, value) == nullptr) {
      throw InvalidAssignment("value '" + value + "' is not a " + std::string(to_string(kind)) +
                              " value of the base lexicon");
    }
    for (const auto& wc : list) {
      std::string indicator;
      if (auto it = assignment.find(wc.key.pattern); it != assignment.end()) {
        indicator = it->second;
        const IndicatorCode* ind = lex.find_indicator(indicator);
        if (ind == nullptr || ind->kind != kind) {
          throw InvalidAssignment("pattern '" + wc.key.pattern + "' assigned to " + indicator + ", which is not a " +
                                  std::string(to_string(kind)) + " indicator");
        }
        if (kind == CharacteristicKind::sphere && taxonomy::sphere_value_for(indicator) != value) {
          throw InvalidAssignment("pattern '" + wc.key.pattern + "' signals " + value + " but is assigned to " +
                                  indicator);
        }
      } else {
        indicator = taxonomy::default_indicator(kind, value);
        if (lex.find_indicator(indicator) == nullptr) {
          throw InvalidAssignment("default indicator " + indicator + " is missing from the base lexicon");
        }
      }

      auto [id_it, fresh] = ids.try_emplace(wc.key, marker_id_for(wc.key));
      if (fresh) {
        std::string id = id_it->second;
        for (int suffix = 2; taken.contains(id); ++suffix) id = id_it->second + "#" + std::to_string(suffix);
        id_it->second = id;
        taken.insert(id);
        Marker m;
        m.id = id;
        m.kind = wc.key.kind;
        m.pattern = wc.key.pattern;
        lex.markers.push_back(std::move(m));
      }

      const std::string io_id = indicator + "/" + value;
      auto& io = ios[io_id];
      io.id = io_id;
      io.indicator = indicator;
      io.value = value;
      io.markers.push_back({id_it->second, from_double_fixed(wc.weight, kWeightDigits)});
    }
  }
  for (auto& [_, io] : ios) lex.ios.push_back(std::move(io));

  std::set<std::string> referenced;
  for (const auto& io : lex.ios) {
    for (const auto& wm : io.markers) referenced.insert(wm.marker_id);
  }
  std::erase_if(lex.markers, [&](const Marker& m) { return !referenced.contains(m.id); });
  canonicalize(lex);
  return lex;
}

EvaluationReport holdout_validate(const Lexicon& lex, const std::vector<LabeledCorpus>& holdout,
                                  const ScoreOptions& options, const std::set<std::string>& training_members) {
  std::vector<std::string> shared;
  for (const auto& m : holdout) {
    if (training_members.contains(m.corpus.member_id)) shared.push_back(m.corpus.member_id);
  }
  if (!shared.empty()) {
    std::string message = "holdout shares " + std::to_string(shared.size()) + " member(s) with training:";
    for (const auto& id : shared) message += " " + id;
    throw TrainTestOverlap(message);
  }

  const MarkerMatcher matcher(lex);
  std::vector<Profile> profiles(holdout.size());
  detail::parallel_for(holdout.size(), 0,
                       [&](std::size_t i) { profiles[i] = profile(holdout[i].corpus, lex, matcher, options); });

  EvaluationReport report;
  for (std::size_t i = 0; i < holdout.size(); ++i) {
    for (const auto& [kind, label] : holdout[i].labels) {
      auto& ev = report.kinds[kind];
      const auto& decision = profiles[i].decision(kind);
      const std::string decided = decision.decided.value_or(std::string(kUndetermined));
      ++ev.members;
      ++ev.per_value[label].support;
      ++ev.confusion[label][decided];
      if (!decision.decided) {
        ++ev.undetermined;
        continue;
      }
      ++ev.per_value[decided].predicted;
      if (decided == label) {
        ++ev.correct;
        ++ev.per_value[label].correct;
      }
    }
  }
  auto ratio = [](std::uint64_t a, std::uint64_t b) {
    return b == 0 ? Rational(0) : make_ratio(static_cast<long>(a), static_cast<unsigned long>(b));
  };
  for (auto& [_, ev] : report.kinds) {
    ev.accuracy = ratio(ev.correct, ev.members);
    ev.undetermined_rate = ratio(ev.undetermined, ev.members);
    for (auto& [__, vm] : ev.per_value) {
      vm.precision = ratio(vm.correct, vm.predicted);
      vm.recall = ratio(vm.correct, vm.support);
    }
  }
  return report;
}

}  // namespace lexiprof
