#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lexiprof/kind.hpp"

namespace lexiprof {

/// Planted-vocabulary corpus: every class gets its own vocabulary mixed into
/// posts drawn mostly from a shared noise vocabulary.
struct SyntheticSpec {
  CharacteristicKind kind = CharacteristicKind::gender;
  std::vector<std::string> classes;  // empty: the kind's first two values
  std::size_t members_per_class = 50;
  std::size_t holdout_per_class = 10;
  std::size_t posts_per_member = 20;
  std::size_t planted_vocabulary = 20;
  std::size_t noise_vocabulary = 200;
  std::size_t tokens_per_post = 15;
  std::size_t planted_per_post = 6;
  /// Fraction of holdout members whose declaration names a wrong class.
  double lie_rate = 0.0;
  std::uint64_t seed = 1;
};

struct SyntheticCorpus {
  std::string train_labeled;    // JSONL posts with labels
  std::string holdout_labeled;  // JSONL posts with labels
  std::string holdout_posts;    // the holdout posts without labels
  std::string holdout_declared; // JSONL declarations for the holdout
  std::vector<std::vector<std::string>> planted;  // per class
  std::vector<std::string> noise;
};

/// Deterministic for a given spec on every platform.
SyntheticCorpus generate_synthetic(const SyntheticSpec& spec);

}  // namespace lexiprof
