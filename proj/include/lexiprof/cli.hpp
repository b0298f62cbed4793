#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lexiprof::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  std::string posts;
  std::string declared;
  std::string labeled;
  std::string train;
  std::string lexicon;
  std::string base;
  std::string assignment;
  std::string out;
  std::string out_dir;
  std::string dump_matches;
  std::string kind = "gender";
  std::string threshold = "1/20";
  std::string format = "json";
  bool binary_counts = false;
  std::uint64_t seed = 1;
  unsigned jobs = 0;

  // build-lexicon
  std::uint64_t min_member_support = 3;
  std::uint64_t min_class_posts = 20;
  std::size_t max_phrase_len = 3;
  std::string smoothing = "1";
  std::size_t top_k = 50;

  // gen-synthetic
  std::size_t members_per_class = 50;
  std::size_t holdout_per_class = 10;
  std::size_t posts_per_member = 20;
  std::size_t tokens_per_post = 15;
  std::size_t planted_per_post = 6;
  double lie_rate = 0.0;
};

/// Runs one command line (without the program name). Machine output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lexiprof::cli
