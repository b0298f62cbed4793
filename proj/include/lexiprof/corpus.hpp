#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexiprof/kind.hpp"
#include "lexiprof/lexicon.hpp"

namespace lexiprof {

struct Post {
  std::string member_id;
  std::string post_id;
  std::string text;
  std::optional<std::string> thread_id;
  std::optional<std::string> timestamp;

  bool operator==(const Post&) const = default;
};

/// Registration data a member supplied: kind -> value code (education free-form).
struct DeclaredProfile {
  std::string member_id;
  std::map<CharacteristicKind, std::string> declared;

  bool operator==(const DeclaredProfile&) const = default;
};

/// One member's information track.
struct UserCorpus {
  std::string member_id;
  std::vector<Post> posts;  // ingestion order
  std::optional<DeclaredProfile> declared;

  bool operator==(const UserCorpus&) const = default;
};

using CorpusMap = std::map<std::string, UserCorpus>;

/// A member of a training or holdout sample with its known labels.
struct LabeledCorpus {
  UserCorpus corpus;
  std::map<CharacteristicKind, std::string> labels;

  bool operator==(const LabeledCorpus&) const = default;
};

/// Parses JSONL posts. Throws ParseError or DuplicatePost.
CorpusMap parse_posts(std::string_view jsonl);
CorpusMap ingest_posts(const std::filesystem::path& path);

/// Attaches JSONL declarations. Members without posts get an empty corpus.
/// Throws ParseError or UnknownValueCode.
void parse_declared(CorpusMap& corpora, std::string_view jsonl, const Lexicon& lex);
CorpusMap attach_declared(CorpusMap corpora, const std::filesystem::path& path, const Lexicon& lex);

/// Parses JSONL posts that each carry `label: {kind, code}`; one entry per
/// member in order of first appearance. Throws ParseError, DuplicatePost,
/// UnknownValueCode or ConflictingLabel.
std::vector<LabeledCorpus> parse_labeled(std::string_view jsonl, const Lexicon& lex);
std::vector<LabeledCorpus> ingest_labeled(const std::filesystem::path& path, const Lexicon& lex);

/// Serializes posts (used by the synthetic generator).
std::string post_to_jsonl(const Post& post);

}  // namespace lexiprof
