#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace lexiprof {

enum class CharacteristicKind { gender, age, sphere, education };

/// The kinds a profile decides, in profile order.
inline constexpr std::array<CharacteristicKind, 3> kScoreableKinds = {
    CharacteristicKind::gender, CharacteristicKind::age, CharacteristicKind::sphere};

/// All kinds in verdict order.
inline constexpr std::array<CharacteristicKind, 4> kAllKinds = {
    CharacteristicKind::gender, CharacteristicKind::age, CharacteristicKind::sphere,
    CharacteristicKind::education};

constexpr bool is_scoreable(CharacteristicKind kind) {
  return kind != CharacteristicKind::education;
}

constexpr std::string_view to_string(CharacteristicKind kind) {
  switch (kind) {
    case CharacteristicKind::gender:
      return "gender";
    case CharacteristicKind::age:
      return "age";
    case CharacteristicKind::sphere:
      return "sphere";
    case CharacteristicKind::education:
      return "education";
  }
  return "?";
}

constexpr std::optional<CharacteristicKind> parse_kind(std::string_view text) {
  for (auto kind : kAllKinds) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

}  // namespace lexiprof
