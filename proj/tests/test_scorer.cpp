#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "lexiprof/scorer.hpp"
#include "support.hpp"

using namespace lexiprof;
using namespace lexiprof::testing;

namespace {

MarkerCounts counts_of(std::map<std::string, std::uint64_t> c) {
  MarkerCounts out;
  out.member_id = "m";
  out.counts = std::move(c);
  return out;
}

IndicativeCharacteristic io_of(std::vector<std::pair<std::string, Rational>> markers, std::string id = "io") {
  IndicativeCharacteristic io;
  io.id = std::move(id);
  io.indicator = "Gender-A";
  io.value = "female";
  for (auto& [m, w] : markers) io.markers.push_back({m, w});
  return io;
}

IndicatorScore score_of(CharacteristicKind kind, std::string indicator, std::string value, Rational s) {
  return {{kind, std::move(indicator), ""}, {kind, std::move(value), ""}, std::move(s)};
}

UserCorpus member(const std::vector<std::string>& texts) {
  UserCorpus c;
  c.member_id = "m1";
  for (std::size_t i = 0; i < texts.size(); ++i) c.posts.push_back({"m1", "p" + std::to_string(i), texts[i], {}, {}});
  return c;
}

}  // namespace

TEST_CASE("congruence examples") {
  CHECK(congruence(counts_of({{"m1", 1}}), io_of({{"m1", Rational(1)}})).mu == 1);
  CHECK(congruence(counts_of({{"m1", 0}, {"m2", 0}}), io_of({{"m1", Rational(3)}, {"m2", Rational(1, 2)}})).mu == 0);

  const auto terms = std::vector<oracle::Term>{{2, 1, 3}, {1, 1, 0}, {1, 1, 1}};
  const auto expected = oracle::congruence(terms);
  CHECK(expected == oracle::BigRational(7, 12));
  const auto mu = congruence(counts_of({{"m1", 3}, {"m2", 0}, {"m3", 1}}),
                             io_of({{"m1", Rational(2)}, {"m2", Rational(1)}, {"m3", Rational(1)}}))
                      .mu;
  CHECK(same_value(mu, expected));
}

TEST_CASE("dangling markers are reported") {
  CHECK_THROWS_AS(congruence(counts_of({{"m1", 1}}), io_of({{"m2", Rational(1)}})), DanglingMarker);
}

TEST_CASE("congruence agrees with the term-by-term oracle") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const auto inst = random_instance(rng);
    CHECK(same_value(congruence(inst.counts, inst.io).mu, oracle::congruence(inst.terms)));
  }
}

TEST_CASE("congruence properties") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto inst = random_instance(rng);
    const Rational mu = congruence(inst.counts, inst.io).mu;
    std::uint64_t max_n = 0;
    bool any = false;
    for (const auto& wm : inst.io.markers) {
      max_n = std::max(max_n, inst.counts.counts.at(wm.marker_id));
      any = any || inst.counts.counts.at(wm.marker_id) > 0;
    }
    CHECK(sgn(mu) >= 0);
    CHECK(mu <= Rational(static_cast<unsigned long>(max_n)));
    CHECK((sgn(mu) == 0) == !any);

    const Rational bin = congruence(binarize(inst.counts), inst.io).mu;
    CHECK(sgn(bin) >= 0);
    CHECK(bin <= 1);

    auto bumped = inst.counts;
    ++bumped.counts[inst.io.markers[rng() % inst.io.markers.size()].marker_id];
    CHECK(congruence(bumped, inst.io).mu >= mu);

    auto scaled = inst.io;
    const Rational c = make_ratio(static_cast<long>(1 + rng() % 50), 1 + rng() % 17);
    for (auto& wm : scaled.markers) wm.weight *= c;
    CHECK(congruence(inst.counts, scaled).mu == mu);
  }
}

TEST_CASE("indicator scores average IO congruences") {
  const Lexicon lex = partial_lexicon(
      {word("a", "alpha"), word("b", "beta"), word("c", "gamma"), word("d", "delta")},
      {{"io1", "Gender-A", "female", {{"a", Rational(1)}}},
       {"io2", "Gender-A", "female", {{"b", Rational(1)}}},
       {"io3", "Gender-B", "male", {{"c", Rational(1)}, {"d", Rational(1)}}},
       {"io4", "Sphere-E", "sphere-e", {{"d", Rational(2)}}}});
  const auto scores = indicator_scores(counts_of({{"a", 1}, {"b", 0}, {"c", 2}, {"d", 0}}), lex);
  REQUIRE(scores.size() == 3);
  CHECK(scores[0].indicator.code == "Gender-A");
  CHECK(scores[0].score == Rational(1, 2));
  CHECK(scores[1].indicator.code == "Gender-B");
  CHECK(scores[1].score == Rational(1, 2));  // 2 / (2 * 2)
  CHECK(scores[2].indicator.code == "Sphere-E");
  CHECK(scores[2].score == 0);
}

TEST_CASE("indicator score equals the mean of hand-computed IO congruences") {
  // Three IOs under Age-C for adolescent with congruences 1/2, 1/4, 1/4.
  const Lexicon lex = partial_lexicon(
      {word("a", "alpha"), word("b", "beta"), word("c", "gamma"), word("d", "delta")},
      {{"io1", "Age-C", "adolescent", {{"a", Rational(1)}, {"b", Rational(1)}}},
       {"io2", "Age-C", "adolescent", {{"c", Rational(1)}, {"d", Rational(1)}}},
       {"io3", "Age-C", "adolescent", {{"b", Rational(3)}, {"d", Rational(1)}}}});
  const auto counts = counts_of({{"a", 2}, {"b", 0}, {"c", 1}, {"d", 0}});
  const Rational io1 = Rational(2) / Rational(4);
  const Rational io2 = Rational(1) / Rational(4);
  const Rational io3 = Rational(0);
  REQUIRE(congruence(counts, lex.ios[0]).mu == io1);
  REQUIRE(congruence(counts, lex.ios[1]).mu == io2);
  REQUIRE(congruence(counts, lex.ios[2]).mu == io3);
  const auto scores = indicator_scores(counts, lex);
  REQUIRE(scores.size() == 1);
  CHECK(scores[0].score == (io1 + io2 + io3) / 3);
  CHECK(scores[0].score == Rational(1, 4));

  // A variant whose congruences are exactly {1/2, 1/4, 1/4}.
  const Lexicon lex2 = partial_lexicon(
      {word("a", "alpha"), word("b", "beta"), word("c", "gamma"), word("d", "delta")},
      {{"io1", "Age-C", "adolescent", {{"a", Rational(1)}, {"b", Rational(1)}}},
       {"io2", "Age-C", "adolescent", {{"c", Rational(1)}, {"d", Rational(1)}}},
       {"io3", "Age-C", "adolescent", {{"c", Rational(1)}, {"b", Rational(1)}}}});
  const auto scores2 = indicator_scores(counts, lex2);
  CHECK(scores2[0].score == Rational(1, 3));
}

TEST_CASE("every populated gender indicator gets a score") {
  std::vector<Marker> markers;
  std::vector<IoSpec> ios;
  for (char letter = 'A'; letter <= 'L'; ++letter) {
    for (std::string value : {"female", "male"}) {
      const std::string id = std::string(1, letter) + value;
      markers.push_back(word(id, "w" + std::string(1, static_cast<char>(letter - 'A' + 'a')) + value));
      ios.push_back({"io-" + id, std::string("Gender-") + letter, value, {{id, Rational(1)}}});
    }
  }
  const Lexicon lex = full_lexicon(markers, ios);
  REQUIRE(validate_lexicon(lex).empty());
  const auto scores = indicator_scores(count_markers(member({"nothing"}), lex), lex);
  CHECK(scores.size() == 24);
  CHECK(std::is_sorted(scores.begin(), scores.end(), [](const auto& a, const auto& b) {
    return std::tie(a.indicator.code, a.value.code) < std::tie(b.indicator.code, b.value.code);
  }));
}

TEST_CASE("decide picks a clear winner") {
  const std::vector<IndicatorScore> scores = {
      score_of(CharacteristicKind::gender, "Gender-A", "female", Rational(3, 5)),
      score_of(CharacteristicKind::gender, "Gender-A", "male", Rational(1, 5))};
  const auto d = decide(scores, CharacteristicKind::gender, Rational(1, 10));
  CHECK(d.decided == "female");
  CHECK(d.margin == Rational(2, 5));

  const auto tie = decide({score_of(CharacteristicKind::gender, "Gender-A", "female", Rational(1, 2)),
                           score_of(CharacteristicKind::gender, "Gender-A", "male", Rational(1, 2))},
                          CharacteristicKind::gender, Rational(0));
  CHECK_FALSE(tie.decided.has_value());

  const auto zero = decide({score_of(CharacteristicKind::gender, "Gender-A", "female", Rational(0)),
                            score_of(CharacteristicKind::gender, "Gender-A", "male", Rational(0))},
                           CharacteristicKind::gender, Rational(0));
  CHECK_FALSE(zero.decided.has_value());

  CHECK_FALSE(decide({}, CharacteristicKind::age, Rational(0)).decided.has_value());
  CHECK_THROWS_AS(decide(scores, CharacteristicKind::education, Rational(0)), UnknownKind);
  CHECK_THROWS_AS(decide(scores, CharacteristicKind::gender, Rational(-1)), std::invalid_argument);
}

TEST_CASE("decide averages indicators per value and respects the threshold") {
  const std::vector<IndicatorScore> scores = {
      score_of(CharacteristicKind::gender, "Gender-A", "female", Rational(1, 2)),
      score_of(CharacteristicKind::gender, "Gender-B", "female", Rational(0)),
      score_of(CharacteristicKind::gender, "Gender-A", "male", Rational(1, 5)),
      score_of(CharacteristicKind::age, "Age-A", "adult", Rational(9))};
  const auto d = decide(scores, CharacteristicKind::gender, Rational(0));
  CHECK(d.value_scores.at("female") == Rational(1, 4));
  CHECK(d.value_scores.at("male") == Rational(1, 5));
  CHECK(d.margin == Rational(1, 20));
  CHECK(d.decided == "female");
  CHECK(decide(scores, CharacteristicKind::gender, Rational(1, 20)).decided == "female");
  CHECK_FALSE(decide(scores, CharacteristicKind::gender, Rational(1, 19)).decided.has_value());
}

TEST_CASE("decide ignores input order") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IndicatorScore> scores;
    for (int i = 0; i < 8; ++i) {
      const std::string value = "sphere-" + std::string(1, static_cast<char>('a' + rng() % 4));
      scores.push_back(score_of(CharacteristicKind::sphere, "Sphere-" + std::string(1, static_cast<char>('A' + i)),
                                value, make_ratio(static_cast<long>(rng() % 5), 1 + rng() % 4)));
    }
    const auto base = decide(scores, CharacteristicKind::sphere, Rational(1, 20));
    std::shuffle(scores.begin(), scores.end(), rng);
    CHECK(decide(scores, CharacteristicKind::sphere, Rational(1, 20)) == base);
  }
}

TEST_CASE("profiles") {
  std::vector<Marker> markers;
  std::vector<IoSpec> ios;
  for (char letter = 'a'; letter <= 'k'; ++letter) {
    const std::string value = std::string("sphere-") + letter;
    const std::string indicator = std::string("Sphere-") + static_cast<char>(letter - 'a' + 'A');
    const std::string id = std::string("w:term") + letter;
    markers.push_back(word(id, std::string("term") + letter));
    ios.push_back({indicator + "/" + value, indicator, value, {{id, Rational(1)}}});
  }
  markers.push_back(word("w:omg", "omg"));
  ios.push_back({"Age-B/adolescent", "Age-B", "adolescent", {{"w:omg", Rational(1)}}});
  const Lexicon lex = full_lexicon(markers, ios);
  REQUIRE(validate_lexicon(lex).empty());

  SUBCASE("no posts") {
    const Profile p = profile(member({}), lex);
    for (const auto& d : p.decisions) CHECK_FALSE(d.decided.has_value());
  }
  SUBCASE("planted sphere markers") {
    const Profile p = profile(member({"the terme dosage", "Terme again"}), lex);
    CHECK(p.decision(CharacteristicKind::sphere).decided == "sphere-e");
    CHECK_FALSE(p.decision(CharacteristicKind::gender).decided.has_value());
    // Only adolescent has age IOs, so there is no runner-up margin.
    CHECK_FALSE(p.decision(CharacteristicKind::age).decided.has_value());
  }
  SUBCASE("ordering and education pass-through") {
    UserCorpus c = member({"terme"});
    c.declared = DeclaredProfile{"m1", {{CharacteristicKind::education, "BSc"}}};
    const Profile p = profile(c, lex);
    REQUIRE(p.decisions.size() == 3);
    CHECK(p.decisions[0].kind == CharacteristicKind::gender);
    CHECK(p.decisions[1].kind == CharacteristicKind::age);
    CHECK(p.decisions[2].kind == CharacteristicKind::sphere);
    CHECK(p.education == "BSc");
    CHECK(profile(c, lex) == p);
  }
  SUBCASE("batch scoring is ordered and matches single scoring") {
    CorpusMap corpora;
    for (int i = 9; i >= 0; --i) {
      UserCorpus c = member({"termb termb", i % 2 ? "termc" : "termj"});
      c.member_id = "m" + std::to_string(i);
      for (auto& post : c.posts) post.member_id = c.member_id;
      corpora[c.member_id] = c;
    }
    const auto all = profile_all(corpora, lex, {}, 4);
    REQUIRE(all.size() == 10);
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(all[i].member_id == "m" + std::to_string(i));
      CHECK(all[i] == profile(corpora.at(all[i].member_id), lex));
    }
  }
}
