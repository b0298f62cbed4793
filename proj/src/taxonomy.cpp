#include "lexiprof/taxonomy.hpp"

#include <array>
#include <cctype>

namespace lexiprof::taxonomy {

namespace {

constexpr std::array<Entry, 2> kGenderValues = {{
    {"female", "Female"},
    {"male", "Male"},
}};

constexpr std::array<Entry, 2> kAgeValues = {{
    {"adolescent", "Adolescent"},
    {"adult", "Adult"},
}};

constexpr std::array<Entry, 11> kSphereValues = {{
    {"sphere-a", "Physico-Mathematical, Technical and Economic sphere"},
    {"sphere-b", "Chemicals sphere"},
    {"sphere-c", "Sociological, Historical, Philosophical and Political sphere"},
    {"sphere-d", "Natural sphere"},
    {"sphere-e", "Medical sphere"},
    {"sphere-f", "Philological-Pedagogical sphere"},
    {"sphere-g", "Sphere of Architecture and Art"},
    {"sphere-h", "Sphere of Physical Training and Sport"},
    {"sphere-i", "Agricultural sphere"},
    {"sphere-j", "Legal sphere"},
    {"sphere-k", "Military sphere"},
}};

constexpr std::array<Entry, 12> kGenderIndicators = {{
    {"Gender-A", "The emotional component"},
    {"Gender-B", "Cultural aspects"},
    {"Gender-C", "References"},
    {"Gender-D", "Guidelines and instructions"},
    {"Gender-E", "Lexical aspect"},
    {"Gender-F", "Method of expressing content"},
    {"Gender-G", "Timeframe"},
    {"Gender-H", "Insignificance"},
    {"Gender-I", "Power, influence and authoritativeness"},
    {"Gender-J", "Beneficiation of language"},
    {"Gender-K", "Composition"},
    {"Gender-L", "Concretization"},
}};

constexpr std::array<Entry, 6> kAgeIndicators = {{
    {"Age-A", "Affiliative and aggressive style"},
    {"Age-B", "Slang variation"},
    {"Age-C", "Modulation of voice and sound similarity"},
    {"Age-D", "Text economy"},
    {"Age-E", "Non-codified units and non-verbal means"},
    {"Age-F", "Deformalization"},
}};

constexpr std::array<Entry, 11> kSphereIndicators = {{
    {"Sphere-A", "Physico-Mathematical, Technical and Economic sphere"},
    {"Sphere-B", "Chemicals sphere"},
    {"Sphere-C", "Sociological, Historical, Philosophical and Political sphere"},
    {"Sphere-D", "Natural sphere"},
    {"Sphere-E", "Medical sphere"},
    {"Sphere-F", "Philological-Pedagogical sphere"},
    {"Sphere-G", "Sphere of Architecture and Art"},
    {"Sphere-H", "Sphere of Physical Training and Sport"},
    {"Sphere-I", "Agricultural sphere"},
    {"Sphere-J", "Legal sphere"},
    {"Sphere-K", "Military sphere"},
}};

}  // namespace

std::span<const Entry> values(CharacteristicKind kind) {
  switch (kind) {
    case CharacteristicKind::gender:
      return kGenderValues;
    case CharacteristicKind::age:
      return kAgeValues;
    case CharacteristicKind::sphere:
      return kSphereValues;
    case CharacteristicKind::education:
      break;
  }
  return {};
}

std::span<const Entry> indicators(CharacteristicKind kind) {
  switch (kind) {
    case CharacteristicKind::gender:
      return kGenderIndicators;
    case CharacteristicKind::age:
      return kAgeIndicators;
    case CharacteristicKind::sphere:
      return kSphereIndicators;
    case CharacteristicKind::education:
      break;
  }
  return {};
}

std::string sphere_value_for(std::string_view indicator_code) {
  constexpr std::string_view prefix = "Sphere-";
  if (indicator_code.size() != prefix.size() + 1 || !indicator_code.starts_with(prefix)) return {};
  return "sphere-" + std::string(1, static_cast<char>(std::tolower(
                                        static_cast<unsigned char>(indicator_code.back()))));
}

std::string default_indicator(CharacteristicKind kind, std::string_view value_code) {
  switch (kind) {
    case CharacteristicKind::gender:
      return "Gender-E";
    case CharacteristicKind::age:
      return "Age-B";
    case CharacteristicKind::sphere:
      if (value_code.size() == 8 && value_code.starts_with("sphere-")) {
        return "Sphere-" + std::string(1, static_cast<char>(std::toupper(
                                              static_cast<unsigned char>(value_code.back()))));
      }
      return {};
    case CharacteristicKind::education:
      break;
  }
  return {};
}

Lexicon default_lexicon() {
  Lexicon lex;
  lex.version = "taxonomy-1";
  lex.coverage = Coverage::full;
  for (auto kind : kScoreableKinds) {
    for (const auto& e : values(kind)) {
      lex.values.push_back({kind, std::string(e.code), std::string(e.label)});
    }
    for (const auto& e : indicators(kind)) {
      lex.indicators.push_back({kind, std::string(e.code), std::string(e.label)});
    }
  }
  canonicalize(lex);
  return lex;
}

}  // namespace lexiprof::taxonomy
