#include "lexiprof/report.hpp"

#include <iomanip>
#include <sstream>

#include "json_util.hpp"

namespace lexiprof {

using detail::ordered_json;

namespace {

std::string dec(const Rational& q) { return render_fixed(q, kReportDigits); }

ordered_json decision_json(const CharacteristicDecision& d) {
  ordered_json scores = ordered_json::object();
  for (const auto& [code, score] : d.value_scores) scores[code] = dec(score);
  return {{"scores", scores},
          {"decided", d.decided.value_or(std::string(kUndetermined))},
          {"margin", dec(d.margin)}};
}

ordered_json optional_json(const std::optional<std::string>& s) {
  return s ? ordered_json(*s) : ordered_json(nullptr);
}

}  // namespace

std::string render_profiles_json(const std::vector<Profile>& profiles) {
  ordered_json out = ordered_json::array();
  for (const auto& p : profiles) {
    ordered_json j;
    j["member_id"] = p.member_id;
    for (const auto& d : p.decisions) j[std::string(to_string(d.kind))] = decision_json(d);
    if (p.education) j["education"] = *p.education;
    out.push_back(std::move(j));
  }
  return detail::dump(out);
}

std::string render_profiles_text(const std::vector<Profile>& profiles) {
  std::ostringstream os;
  os << std::left << std::setw(20) << "member" << std::setw(26) << "gender" << std::setw(26) << "age"
     << "sphere\n";
  for (const auto& p : profiles) {
    os << std::setw(20) << p.member_id;
    for (const auto& d : p.decisions) {
      const std::string cell = d.decided.value_or(std::string(kUndetermined)) + " (" + dec(d.margin) + ")";
      if (d.kind == CharacteristicKind::sphere) {
        os << cell;
      } else {
        os << std::setw(26) << cell;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string render_verification_json(const VerificationBatch& batch) {
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : batch.verdicts) {
    ordered_json j;
    j["member_id"] = v.member_id;
    for (const auto& kv : v.per_kind) {
      j[std::string(to_string(kv.kind))] = {
          {"declared", optional_json(kv.declared)},
          {"computed", kv.computed.value_or(std::string(kUndetermined))},
          {"status", to_string(kv.status)},
          {"margin", dec(kv.margin)}};
    }
    if (v.diagnostic) j["diagnostic"] = *v.diagnostic;
    verdicts.push_back(std::move(j));
  }
  ordered_json summary;
  summary["members"] = batch.summary.members;
  for (const auto& [kind, tally] : batch.summary.tallies) {
    ordered_json t;
    for (const auto& [status, n] : tally) t[std::string(to_string(status))] = n;
    summary[std::string(to_string(kind))] = t;
  }
  ordered_json out;
  out["verdicts"] = std::move(verdicts);
  out["summary"] = std::move(summary);
  return detail::dump(out);
}

std::string render_verification_text(const VerificationBatch& batch) {
  std::ostringstream os;
  os << std::left << std::setw(20) << "member" << std::setw(11) << "kind" << std::setw(16) << "declared"
     << std::setw(16) << "computed" << std::setw(14) << "status"
     << "margin\n";
  for (const auto& v : batch.verdicts) {
    for (const auto& kv : v.per_kind) {
      os << std::setw(20) << v.member_id << std::setw(11) << to_string(kv.kind) << std::setw(16)
         << kv.declared.value_or("-") << std::setw(16) << kv.computed.value_or(std::string(kUndetermined))
         << std::setw(14) << to_string(kv.status) << dec(kv.margin) << '\n';
    }
    if (v.diagnostic) os << "  ! " << *v.diagnostic << '\n';
  }
  os << "\nsummary (" << batch.summary.members << " members)\n";
  for (const auto& [kind, tally] : batch.summary.tallies) {
    os << "  " << std::setw(11) << to_string(kind);
    for (const auto& [status, n] : tally) os << ' ' << to_string(status) << '=' << n;
    os << '\n';
  }
  return os.str();
}

std::string render_evaluation_json(const EvaluationReport& report) {
  ordered_json out = ordered_json::object();
  for (const auto& [kind, ev] : report.kinds) {
    ordered_json per_value = ordered_json::object();
    for (const auto& [code, vm] : ev.per_value) {
      per_value[code] = {{"support", vm.support},
                         {"predicted", vm.predicted},
                         {"correct", vm.correct},
                         {"precision", dec(vm.precision)},
                         {"recall", dec(vm.recall)}};
    }
    ordered_json confusion = ordered_json::object();
    for (const auto& [label, row] : ev.confusion) {
      ordered_json r = ordered_json::object();
      for (const auto& [decided, n] : row) r[decided] = n;
      confusion[label] = r;
    }
    out[std::string(to_string(kind))] = {{"members", ev.members},
                                         {"accuracy", dec(ev.accuracy)},
                                         {"undetermined_rate", dec(ev.undetermined_rate)},
                                         {"per_value", per_value},
                                         {"confusion", confusion}};
  }
  return detail::dump(out);
}

std::string render_evaluation_text(const EvaluationReport& report) {
  std::ostringstream os;
  for (const auto& [kind, ev] : report.kinds) {
    os << to_string(kind) << ": members=" << ev.members << " accuracy=" << dec(ev.accuracy)
       << " undetermined_rate=" << dec(ev.undetermined_rate) << '\n';
    for (const auto& [code, vm] : ev.per_value) {
      os << "  " << std::left << std::setw(14) << code << " precision=" << dec(vm.precision)
         << " recall=" << dec(vm.recall) << " support=" << vm.support << '\n';
    }
  }
  return os.str();
}

std::string render_match_events_jsonl(const std::string& member_id, const std::vector<MatchEvent>& events) {
  std::string out;
  for (const auto& e : events) {
    ordered_json j;
    j["member_id"] = member_id;
    j["post_id"] = e.post_id;
    j["marker_id"] = e.marker_id;
    j["byte_span"] = {e.begin, e.end};
    out += j.dump(-1, ' ', false, detail::json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

std::string render_violations_json(const std::vector<Violation>& violations) {
  ordered_json out = ordered_json::array();
  for (const auto& v : violations) out.push_back({{"entity", v.entity}, {"message", v.message}});
  return detail::dump(out);
}

}  // namespace lexiprof
