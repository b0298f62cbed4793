#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexiprof/errors.hpp"
#include "lexiprof/kind.hpp"
#include "lexiprof/rational.hpp"

namespace lexiprof {

/// Fractional digits used when weights are written to a lexicon file.
inline constexpr int kWeightDigits = 9;

struct CharacteristicValue {
  CharacteristicKind kind = CharacteristicKind::gender;
  std::string code;
  std::string label;

  bool operator==(const CharacteristicValue&) const = default;
};

/// One stylistic indicator of a characteristic, e.g. `Gender-A`.
struct IndicatorCode {
  CharacteristicKind kind = CharacteristicKind::gender;
  std::string code;
  std::string label;

  /// The trailing letter of the code (`'A'` for `Gender-A`).
  char letter() const { return code.empty() ? '\0' : code.back(); }

  bool operator==(const IndicatorCode&) const = default;
};

enum class MarkerKind { linguistic, graphic };
enum class MatchScope { corpus, per_post };

std::string_view to_string(MarkerKind kind);
std::string_view to_string(MatchScope scope);

struct MatchRegulations {
  bool whole_token = true;  // ignored for graphic markers
  std::uint32_t min_count = 1;
  MatchScope scope = MatchScope::corpus;

  bool operator==(const MatchRegulations&) const = default;
};

struct Marker {
  std::string id;
  MarkerKind kind = MarkerKind::linguistic;
  /// Linguistic: folded tokens joined by single spaces. Graphic: raw literal.
  std::string pattern;
  MatchRegulations regulations;

  bool operator==(const Marker&) const = default;
};

struct WeightedMarker {
  std::string marker_id;
  Rational weight;

  bool operator==(const WeightedMarker& other) const {
    return marker_id == other.marker_id && weight == other.weight;
  }
};

/// A weighted marker set signalling one value through one indicator.
struct IndicativeCharacteristic {
  std::string id;
  std::string indicator;  // IndicatorCode::code
  std::string value;      // CharacteristicValue::code, within the indicator's kind
  std::vector<WeightedMarker> markers;

  bool operator==(const IndicativeCharacteristic&) const = default;
};

/// `full` lexicons must carry the complete value and indicator taxonomy;
/// `partial` ones may carry any subset of it.
enum class Coverage { full, partial };

struct Lexicon {
  std::string version;
  Coverage coverage = Coverage::full;
  std::vector<CharacteristicValue> values;
  std::vector<IndicatorCode> indicators;
  std::vector<IndicativeCharacteristic> ios;
  std::vector<Marker> markers;

  const Marker* find_marker(std::string_view id) const;
  const IndicatorCode* find_indicator(std::string_view code) const;
  const CharacteristicValue* find_value(CharacteristicKind kind, std::string_view code) const;
  std::vector<const CharacteristicValue*> values_of(CharacteristicKind kind) const;

  bool operator==(const Lexicon&) const = default;
};

struct Violation {
  std::string entity;  // id or code of the offending entity
  std::string message;

  bool operator==(const Violation&) const = default;
};

std::string to_string(const Violation& v);

/// Reports every invariant violation; empty means valid.
std::vector<Violation> validate_lexicon(const Lexicon& lex);

/// Sorts every entity list by id (values and indicators by kind, then code).
void canonicalize(Lexicon& lex);

/// Parses a lexicon document. Throws ParseError or ValidationError.
Lexicon parse_lexicon(std::string_view json_text);

/// Parses a lexicon document without checking invariants. Throws ParseError.
Lexicon parse_lexicon_unvalidated(std::string_view json_text);

/// Reads and parses a lexicon file. Throws IoError, ParseError or ValidationError.
Lexicon load_lexicon(const std::filesystem::path& path);

/// Canonical serialization: sorted entities, weights with nine fractional digits.
std::string serialize_lexicon(const Lexicon& lex);

void save_lexicon(const Lexicon& lex, const std::filesystem::path& path);

}  // namespace lexiprof
