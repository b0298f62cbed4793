#include "support.hpp"

#include "lexiprof/taxonomy.hpp"

namespace lexiprof::testing {

namespace {

void add_ios(Lexicon& lex, std::vector<Marker> markers, const std::vector<IoSpec>& ios) {
  lex.markers = std::move(markers);
  for (const auto& spec : ios) {
    IndicativeCharacteristic io;
    io.id = spec.id;
    io.indicator = spec.indicator;
    io.value = spec.value;
    for (const auto& [id, w] : spec.markers) io.markers.push_back({id, w});
    lex.ios.push_back(std::move(io));
  }
  canonicalize(lex);
}

}  // namespace

Lexicon partial_lexicon(std::vector<Marker> markers, const std::vector<IoSpec>& ios) {
  Lexicon lex = taxonomy::default_lexicon();
  lex.version = "test";
  lex.coverage = Coverage::partial;
  add_ios(lex, std::move(markers), ios);
  return lex;
}

Lexicon full_lexicon(std::vector<Marker> markers, const std::vector<IoSpec>& ios) {
  Lexicon lex = taxonomy::default_lexicon();
  lex.version = "test";
  add_ios(lex, std::move(markers), ios);
  return lex;
}

}  // namespace lexiprof::testing
