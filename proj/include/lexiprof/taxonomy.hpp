#pragma once

#include <span>
#include <string_view>

#include "lexiprof/kind.hpp"
#include "lexiprof/lexicon.hpp"

namespace lexiprof::taxonomy {

struct Entry {
  std::string_view code;
  std::string_view label;
};

/// Canonical value codes of a scoreable kind (empty for education).
std::span<const Entry> values(CharacteristicKind kind);

/// Canonical indicator codes of a scoreable kind (empty for education).
std::span<const Entry> indicators(CharacteristicKind kind);

/// Sphere indicators map one-to-one onto sphere values: `Sphere-E` <-> `sphere-e`.
std::string sphere_value_for(std::string_view indicator_code);

/// The indicator unassigned trained markers fall into for `value_code`.
std::string default_indicator(CharacteristicKind kind, std::string_view value_code);

/// Full taxonomy skeleton: every value and indicator, no markers.
Lexicon default_lexicon();

}  // namespace lexiprof::taxonomy
