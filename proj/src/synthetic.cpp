#include "lexiprof/synthetic.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "json_util.hpp"
#include "lexiprof/corpus.hpp"
#include "lexiprof/taxonomy.hpp"

namespace lexiprof {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 rng_;
};

std::string pseudo_word(Draw& draw) {
  static constexpr std::string_view consonants = "bcdfghjklmnprstvz";
  static constexpr std::string_view vowels = "aeiou";
  std::string w;
  const std::size_t syllables = 2 + draw.below(2);
  for (std::size_t s = 0; s < syllables; ++s) {
    w.push_back(consonants[draw.below(consonants.size())]);
    w.push_back(vowels[draw.below(vowels.size())]);
  }
  return w;
}

std::vector<std::string> fresh_words(Draw& draw, std::size_t n, std::set<std::string>& used) {
  std::vector<std::string> out;
  while (out.size() < n) {
    std::string w = pseudo_word(draw);
    if (used.insert(w).second) out.push_back(std::move(w));
  }
  return out;
}

std::string make_post(Draw& draw, const SyntheticSpec& spec, const std::vector<std::string>& planted,
                      const std::vector<std::string>& noise) {
  static constexpr std::string_view emoticons[] = {":)", ";)", ":D", ":("};
  static constexpr std::string_view endings[] = {".", "!", "?", "..."};
  const std::size_t planted_n = std::min(spec.planted_per_post, spec.tokens_per_post);
  std::vector<std::string> words;
  for (std::size_t i = 0; i < spec.tokens_per_post - planted_n; ++i) words.push_back(noise[draw.below(noise.size())]);
  for (std::size_t i = 0; i < planted_n; ++i) {
    words.insert(words.begin() + static_cast<std::ptrdiff_t>(draw.below(words.size() + 1)),
                 planted[draw.below(planted.size())]);
  }
  std::string text;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i != 0) text += draw.below(8) == 0 ? ", " : " ";
    std::string w = words[i];
    if (i == 0 && !w.empty()) w[0] = static_cast<char>(w[0] - 'a' + 'A');
    text += w;
  }
  text += endings[draw.below(std::size(endings))];
  if (draw.below(4) == 0) {
    text += ' ';
    text += emoticons[draw.below(std::size(emoticons))];
  }
  return text;
}

std::string labeled_line(const Post& post, CharacteristicKind kind, const std::string& code) {
  auto j = detail::ordered_json::parse(post_to_jsonl(post));
  j["label"] = {{"kind", to_string(kind)}, {"code", code}};
  return j.dump(-1, ' ', false, detail::json::error_handler_t::replace) + "\n";
}

std::string member_id(char prefix, std::size_t n) {
  std::string digits = std::to_string(n);
  if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
  return std::string(1, prefix) + digits;
}

}  // namespace

SyntheticCorpus generate_synthetic(const SyntheticSpec& spec) {
  if (!is_scoreable(spec.kind)) throw std::invalid_argument("synthetic data needs a scoreable kind");
  std::vector<std::string> classes = spec.classes;
  if (classes.empty()) {
    for (const auto& e : taxonomy::values(spec.kind)) {
      if (classes.size() < 2) classes.emplace_back(e.code);
    }
  }
  if (classes.size() < 2) throw std::invalid_argument("synthetic data needs at least two classes");
  if (spec.planted_vocabulary == 0 || spec.noise_vocabulary == 0 || spec.tokens_per_post == 0) {
    throw std::invalid_argument("vocabulary sizes and post length must be positive");
  }

  Draw draw(spec.seed);
  SyntheticCorpus out;
  std::set<std::string> used;
  for (std::size_t c = 0; c < classes.size(); ++c) out.planted.push_back(fresh_words(draw, spec.planted_vocabulary, used));
  out.noise = fresh_words(draw, spec.noise_vocabulary, used);

  auto emit_member = [&](const std::string& id, std::size_t cls, std::string& labeled, std::string* plain) {
    for (std::size_t p = 0; p < spec.posts_per_member; ++p) {
      Post post;
      post.member_id = id;
      post.post_id = "p" + std::to_string(p + 1);
      post.thread_id = "t" + std::to_string(draw.below(25) + 1);
      post.text = make_post(draw, spec, out.planted[cls], out.noise);
      labeled += labeled_line(post, spec.kind, classes[cls]);
      if (plain) {
        *plain += post_to_jsonl(post);
        *plain += '\n';
      }
    }
  };

  // Members alternate between classes so ids carry no label.
  std::size_t serial = 0;
  for (std::size_t i = 0; i < spec.members_per_class; ++i) {
    for (std::size_t c = 0; c < classes.size(); ++c) emit_member(member_id('u', ++serial), c, out.train_labeled, nullptr);
  }
  serial = 0;
  for (std::size_t i = 0; i < spec.holdout_per_class; ++i) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const std::string id = member_id('h', ++serial);
      emit_member(id, c, out.holdout_labeled, &out.holdout_posts);
      std::string declared = classes[c];
      if (spec.lie_rate > 0 && draw.unit() < spec.lie_rate) declared = classes[(c + 1) % classes.size()];
      detail::ordered_json d;
      d["member_id"] = id;
      d["declared"] = {{std::string(to_string(spec.kind)), declared}};
      out.holdout_declared += d.dump() + "\n";
    }
  }
  return out;
}

}  // namespace lexiprof
