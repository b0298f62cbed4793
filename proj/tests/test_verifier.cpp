#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lexiprof/synthetic.hpp"
#include "lexiprof/taxonomy.hpp"
#include "lexiprof/trainer.hpp"
#include "lexiprof/verifier.hpp"
#include "support.hpp"

using namespace lexiprof;
using namespace lexiprof::testing;

namespace {

Lexicon small_lexicon() {
  return full_lexicon({word("w:lovely", "lovely"), word("w:dude", "dude"), word("w:homework", "homework"),
                       word("w:mortgage", "mortgage"), word("w:dose", "dose")},
                      {{"Gender-E/female", "Gender-E", "female", {{"w:lovely", Rational(1)}}},
                       {"Gender-E/male", "Gender-E", "male", {{"w:dude", Rational(1)}}},
                       {"Age-B/adolescent", "Age-B", "adolescent", {{"w:homework", Rational(1)}}},
                       {"Age-B/adult", "Age-B", "adult", {{"w:mortgage", Rational(1)}}},
                       {"Sphere-B/sphere-b", "Sphere-B", "sphere-b", {{"w:dose", Rational(1)}}}});
}

UserCorpus member(const std::string& id, const std::vector<std::string>& texts,
                  std::map<CharacteristicKind, std::string> declared) {
  UserCorpus c;
  c.member_id = id;
  for (std::size_t i = 0; i < texts.size(); ++i) c.posts.push_back({id, "p" + std::to_string(i), texts[i], {}, {}});
  if (!declared.empty()) c.declared = DeclaredProfile{id, std::move(declared)};
  return c;
}

int rank(VerdictStatus s) {
  return s == VerdictStatus::unverifiable ? 1 : 0;
}

}  // namespace

TEST_CASE("classify follows the status table") {
  CHECK(classify("female", "female") == VerdictStatus::confirmed);
  CHECK(classify("adult", "adolescent") == VerdictStatus::contradicted);
  CHECK(classify("sphere-b", std::nullopt) == VerdictStatus::unverifiable);
  CHECK(classify(std::nullopt, "male") == VerdictStatus::undeclared);
  CHECK(classify(std::nullopt, std::nullopt) == VerdictStatus::undeclared);
}

TEST_CASE("single-member verdicts") {
  const Lexicon lex = small_lexicon();

  const auto v = verify(member("u1", {"what a lovely mortgage"},
                               {{CharacteristicKind::gender, "female"}, {CharacteristicKind::age, "adolescent"},
                                {CharacteristicKind::sphere, "sphere-b"}, {CharacteristicKind::education, "PhD"}}),
                        lex);
  CHECK(v.at(CharacteristicKind::gender).status == VerdictStatus::confirmed);
  CHECK(v.at(CharacteristicKind::gender).computed == "female");
  CHECK(v.at(CharacteristicKind::age).status == VerdictStatus::contradicted);
  CHECK(v.at(CharacteristicKind::age).computed == "adult");
  CHECK(v.at(CharacteristicKind::age).margin == 1);
  CHECK(v.at(CharacteristicKind::sphere).status == VerdictStatus::unverifiable);
  CHECK(v.at(CharacteristicKind::education).status == VerdictStatus::unverifiable);
  CHECK_FALSE(v.at(CharacteristicKind::education).computed);
  CHECK(v.per_kind.size() == 4);

  const auto empty = verify(member("u2", {}, {{CharacteristicKind::sphere, "sphere-b"}}), lex);
  CHECK(empty.at(CharacteristicKind::sphere).status == VerdictStatus::unverifiable);
  CHECK(empty.at(CharacteristicKind::gender).status == VerdictStatus::undeclared);
  CHECK(empty.at(CharacteristicKind::education).status == VerdictStatus::undeclared);
}

TEST_CASE("verdicts agree with profiles") {
  const Lexicon lex = small_lexicon();
  const auto c = member("u1", {"dude, my homework", "dose dose"}, {{CharacteristicKind::gender, "female"}});
  const auto p = profile(c, lex);
  const auto v = verify(c, lex);
  for (auto kind : kScoreableKinds) {
    CHECK(v.at(kind).computed == p.decision(kind).decided);
    CHECK(v.at(kind).margin == p.decision(kind).margin);
  }
}

TEST_CASE("batch tallies") {
  const Lexicon lex = small_lexicon();
  CorpusMap corpora;
  corpora["a"] = member("a", {"lovely"}, {{CharacteristicKind::gender, "female"}});
  corpora["b"] = member("b", {"dude"}, {{CharacteristicKind::gender, "female"}});
  corpora["c"] = member("c", {"dude"}, {});
  const auto batch = verify_batch(corpora, lex);
  REQUIRE(batch.verdicts.size() == 3);
  CHECK(batch.verdicts[0].member_id == "a");
  CHECK(batch.verdicts[2].member_id == "c");
  const auto& g = batch.summary.tallies.at(CharacteristicKind::gender);
  CHECK(g.at(VerdictStatus::confirmed) == 1);
  CHECK(g.at(VerdictStatus::contradicted) == 1);
  CHECK(g.at(VerdictStatus::undeclared) == 1);
  CHECK(g.at(VerdictStatus::unverifiable) == 0);
  CHECK(batch.summary.members == 3);

  const auto none = verify_batch({}, lex);
  CHECK(none.verdicts.empty());
  CHECK(none.summary.members == 0);
  for (const auto& [_, tally] : none.summary.tallies) {
    for (const auto& [__, n] : tally) CHECK(n == 0);
  }
}

TEST_CASE("scoring failures become diagnostics") {
  Lexicon lex = small_lexicon();
  lex.ios[0].markers.push_back({"w:missing", Rational(1)});
  CorpusMap corpora;
  corpora["a"] = member("a", {"lovely"}, {{CharacteristicKind::gender, "female"}});
  const auto batch = verify_batch(corpora, lex);
  REQUIRE(batch.verdicts.size() == 1);
  CHECK(batch.verdicts[0].diagnostic.has_value());
  CHECK(batch.verdicts[0].at(CharacteristicKind::gender).status == VerdictStatus::unverifiable);
  CHECK(batch.verdicts[0].at(CharacteristicKind::age).status == VerdictStatus::undeclared);
}

TEST_CASE("partition and monotone caution on random batches") {
  const Lexicon lex = small_lexicon();
  const std::vector<std::string> vocab = {"lovely", "dude", "homework", "mortgage", "dose", "the", "a", "ok"};
  const std::vector<std::string> genders = {"female", "male"};
  const std::vector<std::string> ages = {"adolescent", "adult"};
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    CorpusMap corpora;
    const std::size_t n = rng() % 30;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string id = "m" + std::to_string(i);
      std::vector<std::string> posts;
      for (std::size_t p = rng() % 4; p > 0; --p) {
        std::string text;
        for (std::size_t t = 1 + rng() % 6; t > 0; --t) text += vocab[rng() % vocab.size()] + " ";
        posts.push_back(text);
      }
      std::map<CharacteristicKind, std::string> declared;
      if (rng() % 3) declared[CharacteristicKind::gender] = genders[rng() % 2];
      if (rng() % 3) declared[CharacteristicKind::age] = ages[rng() % 2];
      if (rng() % 2) declared[CharacteristicKind::sphere] = "sphere-b";
      corpora[id] = member(id, posts, declared);
    }

    std::vector<VerificationBatch> batches;
    for (const auto& t : {Rational(0), Rational(1, 20), Rational(1, 5)}) {
      batches.push_back(verify_batch(corpora, lex, {t, false}));
      const auto& s = batches.back().summary;
      CHECK(s.members == n);
      for (auto kind : kAllKinds) {
        std::uint64_t total = 0;
        for (auto status : kAllStatuses) total += s.tallies.at(kind).at(status);
        CHECK(total == n);
      }
    }
    for (std::size_t b = 1; b < batches.size(); ++b) {
      for (std::size_t i = 0; i < n; ++i) {
        for (auto kind : kAllKinds) {
          const auto before = batches[b - 1].verdicts[i].at(kind).status;
          const auto after = batches[b].verdicts[i].at(kind).status;
          if (before != after) {
            CHECK(after == VerdictStatus::unverifiable);
          }
          CHECK(rank(after) >= rank(before));
        }
      }
    }
  }
}

TEST_CASE("truthful declarations are rarely contradicted") {
  SyntheticSpec spec;
  spec.seed = 11;
  const auto data = generate_synthetic(spec);
  const Lexicon base = taxonomy::default_lexicon();
  const auto train = parse_labeled(data.train_labeled, base);
  const TrainerConfig cfg;
  const Lexicon lex = assemble_lexicon(weigh_candidates(extract_candidates(train, CharacteristicKind::gender, cfg), cfg),
                                       CharacteristicKind::gender, {}, base);
  CorpusMap corpora = parse_posts(data.holdout_posts);
  parse_declared(corpora, data.holdout_declared, lex);
  const auto batch = verify_batch(corpora, lex);
  const auto& g = batch.summary.tallies.at(CharacteristicKind::gender);
  CHECK(batch.summary.members == 20);
  CHECK(make_ratio(static_cast<long>(g.at(VerdictStatus::contradicted)), batch.summary.members) <= Rational(1, 20));
  CHECK(g.at(VerdictStatus::undeclared) == 0);

  SyntheticSpec liars = spec;
  liars.lie_rate = 1.0;
  const auto lying = generate_synthetic(liars);
  CorpusMap lied = parse_posts(lying.holdout_posts);
  parse_declared(lied, lying.holdout_declared, lex);
  const auto lied_batch = verify_batch(lied, lex);
  const auto& lg = lied_batch.summary.tallies.at(CharacteristicKind::gender);
  CHECK(lg.at(VerdictStatus::contradicted) >= 19);
}
