#include "lexiprof/lexicon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "json_util.hpp"
#include "lexiprof/taxonomy.hpp"
#include "lexiprof/text.hpp"

namespace lexiprof {

using detail::json;
using detail::ordered_json;

namespace {

constexpr std::size_t kMaxPhraseTokens = 8;

bool is_canonical(std::span<const taxonomy::Entry> entries, std::string_view code) {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const taxonomy::Entry& e) { return e.code == code; });
}

CharacteristicKind parse_kind_field(const json& obj, const std::string& where) {
  const std::string text = detail::require_string(obj, "kind", where);
  auto kind = parse_kind(text);
  if (!kind) throw ParseError(where + ".kind: unknown characteristic kind '" + text + "'", 0);
  return *kind;
}

Rational parse_weight(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_decimal(v.get<std::string>());
    if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what(), 0);
  }
  throw ParseError(where + ": weight must be a decimal string", 0);
}

MatchRegulations parse_regulations(const json& obj, const std::string& where) {
  detail::check_keys(obj, {"whole_token", "min_count", "scope"}, where);
  MatchRegulations r;
  if (auto it = obj.find("whole_token"); it != obj.end()) {
    if (!it->is_boolean()) throw ParseError(where + ".whole_token: expected a boolean", 0);
    r.whole_token = it->get<bool>();
  }
  if (auto it = obj.find("min_count"); it != obj.end()) {
    if (!it->is_number_integer()) throw ParseError(where + ".min_count: expected an integer", 0);
    const auto n = it->get<long long>();
    // Out-of-range values are clamped and reported by validation.
    r.min_count = n < 0 ? 0u : static_cast<std::uint32_t>(std::min<long long>(n, UINT32_MAX));
  }
  if (auto it = obj.find("scope"); it != obj.end()) {
    const std::string s = it->is_string() ? it->get<std::string>() : std::string{};
    if (s == "corpus") {
      r.scope = MatchScope::corpus;
    } else if (s == "per_post") {
      r.scope = MatchScope::per_post;
    } else {
      throw ParseError(where + ".scope: expected \"corpus\" or \"per_post\"", 0);
    }
  }
  return r;
}

const json& require_array(const json& obj, const char* key) {
  const json& v = detail::require(obj, key, "lexicon");
  if (!v.is_array()) throw ParseError(std::string("lexicon.") + key + ": expected an array", 0);
  return v;
}

}  // namespace

std::string_view to_string(MarkerKind kind) {
  return kind == MarkerKind::linguistic ? "linguistic" : "graphic";
}

std::string_view to_string(MatchScope scope) {
  return scope == MatchScope::corpus ? "corpus" : "per_post";
}

std::string to_string(const Violation& v) { return v.entity + ": " + v.message; }

const Marker* Lexicon::find_marker(std::string_view id) const {
  auto it = std::find_if(markers.begin(), markers.end(), [&](const Marker& m) { return m.id == id; });
  return it == markers.end() ? nullptr : &*it;
}

const IndicatorCode* Lexicon::find_indicator(std::string_view code) const {
  auto it = std::find_if(indicators.begin(), indicators.end(),
                         [&](const IndicatorCode& i) { return i.code == code; });
  return it == indicators.end() ? nullptr : &*it;
}

const CharacteristicValue* Lexicon::find_value(CharacteristicKind kind, std::string_view code) const {
  auto it = std::find_if(values.begin(), values.end(), [&](const CharacteristicValue& v) {
    return v.kind == kind && v.code == code;
  });
  return it == values.end() ? nullptr : &*it;
}

std::vector<const CharacteristicValue*> Lexicon::values_of(CharacteristicKind kind) const {
  std::vector<const CharacteristicValue*> out;
  for (const auto& v : values) {
    if (v.kind == kind) out.push_back(&v);
  }
  return out;
}

std::vector<Violation> validate_lexicon(const Lexicon& lex) {
  std::vector<Violation> out;
  auto report = [&](std::string entity, std::string message) {
    out.push_back({std::move(entity), std::move(message)});
  };

  // Values.
  std::set<std::pair<CharacteristicKind, std::string>> seen_values;
  std::map<CharacteristicKind, std::size_t> value_counts;
  for (const auto& v : lex.values) {
    if (!is_scoreable(v.kind)) {
      report(v.code, "education values are declarable only and cannot appear in a lexicon");
      continue;
    }
    if (!is_canonical(taxonomy::values(v.kind), v.code)) {
      report(v.code, "not a known " + std::string(to_string(v.kind)) + " value code");
      continue;
    }
    if (!seen_values.emplace(v.kind, v.code).second) {
      report(v.code, "duplicate value code");
      continue;
    }
    ++value_counts[v.kind];
  }

  // Indicators.
  std::set<std::string> seen_indicators;
  std::map<CharacteristicKind, std::size_t> indicator_counts;
  for (const auto& ind : lex.indicators) {
    if (!is_scoreable(ind.kind)) {
      report(ind.code, "education has no indicators");
      continue;
    }
    if (!is_canonical(taxonomy::indicators(ind.kind), ind.code)) {
      report(ind.code, "not a known " + std::string(to_string(ind.kind)) + " indicator code");
      continue;
    }
    if (!seen_indicators.insert(ind.code).second) {
      report(ind.code, "duplicate indicator code");
      continue;
    }
    ++indicator_counts[ind.kind];
  }

  if (lex.coverage == Coverage::full) {
    for (auto kind : kScoreableKinds) {
      const std::string name(to_string(kind));
      const auto want_values = taxonomy::values(kind).size();
      if (value_counts[kind] != want_values) {
        report(name, "expected " + std::to_string(want_values) + " " + name + " values, found " +
                         std::to_string(value_counts[kind]));
      }
      const auto want_indicators = taxonomy::indicators(kind).size();
      if (indicator_counts[kind] != want_indicators) {
        report(name, "expected " + std::to_string(want_indicators) + " " + name +
                         " indicator codes, found " + std::to_string(indicator_counts[kind]));
      }
    }
  }

  // Markers.
  std::set<std::string> marker_ids;
  for (const auto& m : lex.markers) {
    const std::string entity = m.id.empty() ? std::string("<marker with empty id>") : m.id;
    if (m.id.empty()) report(entity, "marker id is empty");
    if (!m.id.empty() && !marker_ids.insert(m.id).second) report(entity, "duplicate marker id");
    if (m.pattern.empty()) {
      report(entity, "marker pattern is empty");
    } else if (m.kind == MarkerKind::linguistic) {
      const std::string canon = canonical_phrase(m.pattern);
      if (canon != m.pattern) {
        report(entity, "linguistic pattern '" + m.pattern +
                           "' is not a case-folded, single-spaced token sequence (expected '" +
                           canon + "')");
      } else {
        const auto n = tokenize(canon).tokens.size();
        if (n > kMaxPhraseTokens) {
          report(entity, "linguistic pattern has " + std::to_string(n) + " tokens (max 8)");
        }
      }
    }
    if (m.regulations.min_count < 1) report(entity, "min_count must be at least 1");
  }

  // Indicative characteristics.
  std::set<std::string> io_ids;
  std::set<std::string> referenced;
  for (const auto& io : lex.ios) {
    const std::string entity = io.id.empty() ? std::string("<io with empty id>") : io.id;
    if (io.id.empty()) report(entity, "indicative characteristic id is empty");
    if (!io.id.empty() && !io_ids.insert(io.id).second) report(entity, "duplicate indicative characteristic id");

    const IndicatorCode* ind = lex.find_indicator(io.indicator);
    if (ind == nullptr) {
      report(entity, "references unknown indicator '" + io.indicator + "'");
    } else if (lex.find_value(ind->kind, io.value) == nullptr) {
      const bool other_kind = std::any_of(lex.values.begin(), lex.values.end(),
                                          [&](const CharacteristicValue& v) { return v.code == io.value; });
      report(entity, other_kind ? "value '" + io.value + "' is not a " +
                                      std::string(to_string(ind->kind)) + " value (indicator " +
                                      ind->code + ")"
                                : "references unknown value '" + io.value + "'");
    } else if (ind->kind == CharacteristicKind::sphere &&
               taxonomy::sphere_value_for(ind->code) != io.value) {
      report(entity, "sphere indicator " + ind->code + " can only signal value " +
                         taxonomy::sphere_value_for(ind->code));
    }

    if (io.markers.empty()) report(entity, "has no weighted markers");
    std::set<std::string> io_markers;
    for (const auto& wm : io.markers) {
      referenced.insert(wm.marker_id);
      if (!io_markers.insert(wm.marker_id).second) {
        report(entity, "lists marker '" + wm.marker_id + "' twice");
      }
      if (sgn(wm.weight) <= 0) {
        report(entity, "marker '" + wm.marker_id + "' has non-positive weight " +
                           render_fixed(wm.weight, kWeightDigits));
      }
      if (!marker_ids.contains(wm.marker_id)) {
        report(wm.marker_id, "referenced by " + entity + " but not defined");
      }
    }
  }

  for (const auto& m : lex.markers) {
    if (!m.id.empty() && !referenced.contains(m.id)) {
      report(m.id, "marker is not referenced by any indicative characteristic");
    }
  }
  return out;
}

void canonicalize(Lexicon& lex) {
  auto by_kind_code = [](const auto& a, const auto& b) {
    return std::tie(a.kind, a.code) < std::tie(b.kind, b.code);
  };
  std::sort(lex.values.begin(), lex.values.end(), by_kind_code);
  std::sort(lex.indicators.begin(), lex.indicators.end(), by_kind_code);
  for (auto& io : lex.ios) {
    std::sort(io.markers.begin(), io.markers.end(),
              [](const WeightedMarker& a, const WeightedMarker& b) { return a.marker_id < b.marker_id; });
  }
  std::sort(lex.ios.begin(), lex.ios.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::sort(lex.markers.begin(), lex.markers.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
}

Lexicon parse_lexicon_unvalidated(std::string_view json_text) {
  const json doc = detail::parse_json(json_text);
  detail::check_keys(doc, {"version", "coverage", "values", "indicators", "ios", "markers"}, "lexicon");

  Lexicon lex;
  lex.version = detail::require_string(doc, "version", "lexicon");
  const std::string coverage = detail::optional_string(doc, "coverage", "lexicon");
  if (coverage.empty() || coverage == "full") {
    lex.coverage = Coverage::full;
  } else if (coverage == "partial") {
    lex.coverage = Coverage::partial;
  } else {
    throw ParseError("lexicon.coverage: expected \"full\" or \"partial\"", 0);
  }

  const json& values = require_array(doc, "values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string where = "values[" + std::to_string(i) + "]";
    detail::check_keys(values[i], {"kind", "code", "label"}, where);
    lex.values.push_back({parse_kind_field(values[i], where), detail::require_string(values[i], "code", where),
                          detail::optional_string(values[i], "label", where)});
  }

  const json& indicators = require_array(doc, "indicators");
  for (std::size_t i = 0; i < indicators.size(); ++i) {
    const std::string where = "indicators[" + std::to_string(i) + "]";
    detail::check_keys(indicators[i], {"kind", "code", "label"}, where);
    lex.indicators.push_back({parse_kind_field(indicators[i], where),
                              detail::require_string(indicators[i], "code", where),
                              detail::optional_string(indicators[i], "label", where)});
  }

  const json& ios = require_array(doc, "ios");
  for (std::size_t i = 0; i < ios.size(); ++i) {
    const std::string where = "ios[" + std::to_string(i) + "]";
    detail::check_keys(ios[i], {"id", "indicator", "value", "markers"}, where);
    IndicativeCharacteristic io;
    io.id = detail::require_string(ios[i], "id", where);
    io.indicator = detail::require_string(ios[i], "indicator", where);
    io.value = detail::require_string(ios[i], "value", where);
    const json& wms = detail::require(ios[i], "markers", where);
    if (!wms.is_array()) throw ParseError(where + ".markers: expected an array", 0);
    for (std::size_t j = 0; j < wms.size(); ++j) {
      const std::string wwhere = where + ".markers[" + std::to_string(j) + "]";
      detail::check_keys(wms[j], {"marker", "weight"}, wwhere);
      io.markers.push_back({detail::require_string(wms[j], "marker", wwhere),
                            parse_weight(detail::require(wms[j], "weight", wwhere), wwhere + ".weight")});
    }
    lex.ios.push_back(std::move(io));
  }

  const json& markers = require_array(doc, "markers");
  for (std::size_t i = 0; i < markers.size(); ++i) {
    const std::string where = "markers[" + std::to_string(i) + "]";
    detail::check_keys(markers[i], {"id", "kind", "pattern", "regulations"}, where);
    Marker m;
    m.id = detail::require_string(markers[i], "id", where);
    const std::string kind = detail::require_string(markers[i], "kind", where);
    if (kind == "linguistic") {
      m.kind = MarkerKind::linguistic;
    } else if (kind == "graphic") {
      m.kind = MarkerKind::graphic;
    } else {
      throw ParseError(where + ".kind: expected \"linguistic\" or \"graphic\"", 0);
    }
    m.pattern = detail::require_string(markers[i], "pattern", where);
    if (auto it = markers[i].find("regulations"); it != markers[i].end()) {
      m.regulations = parse_regulations(*it, where + ".regulations");
    }
    lex.markers.push_back(std::move(m));
  }

  canonicalize(lex);
  return lex;
}

Lexicon parse_lexicon(std::string_view json_text) {
  Lexicon lex = parse_lexicon_unvalidated(json_text);
  if (auto violations = validate_lexicon(lex); !violations.empty()) {
    std::string message = "invalid lexicon: ";
    for (std::size_t i = 0; i < violations.size(); ++i) {
      if (i != 0) message += "; ";
      message += to_string(violations[i]);
    }
    throw ValidationError(message);
  }
  return lex;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  return parse_lexicon(detail::read_file(path));
}

std::string serialize_lexicon(const Lexicon& input) {
  Lexicon lex = input;
  canonicalize(lex);

  ordered_json doc;
  doc["version"] = lex.version;
  doc["coverage"] = lex.coverage == Coverage::full ? "full" : "partial";
  doc["values"] = ordered_json::array();
  for (const auto& v : lex.values) {
    doc["values"].push_back({{"kind", to_string(v.kind)}, {"code", v.code}, {"label", v.label}});
  }
  doc["indicators"] = ordered_json::array();
  for (const auto& i : lex.indicators) {
    doc["indicators"].push_back({{"kind", to_string(i.kind)}, {"code", i.code}, {"label", i.label}});
  }
  doc["ios"] = ordered_json::array();
  for (const auto& io : lex.ios) {
    ordered_json wms = ordered_json::array();
    for (const auto& wm : io.markers) {
      wms.push_back({{"marker", wm.marker_id}, {"weight", render_fixed(wm.weight, kWeightDigits)}});
    }
    doc["ios"].push_back({{"id", io.id}, {"indicator", io.indicator}, {"value", io.value}, {"markers", wms}});
  }
  doc["markers"] = ordered_json::array();
  for (const auto& m : lex.markers) {
    doc["markers"].push_back({{"id", m.id},
                              {"kind", to_string(m.kind)},
                              {"pattern", m.pattern},
                              {"regulations",
                               {{"whole_token", m.regulations.whole_token},
                                {"min_count", m.regulations.min_count},
                                {"scope", to_string(m.regulations.scope)}}}});
  }
  return detail::dump(doc);
}

void save_lexicon(const Lexicon& lex, const std::filesystem::path& path) {
  detail::write_file(path, serialize_lexicon(lex));
}

}  // namespace lexiprof
