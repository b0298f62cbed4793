#include "lexiprof/corpus.hpp"

#include <set>
#include <unordered_map>

#include "json_util.hpp"

namespace lexiprof {

using detail::json;

namespace {

// Calls `fn(json, line_number)` for every non-blank line.
template <typename Fn>
void for_each_jsonl(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    fn(detail::parse_json(line, line_no), line_no);
  }
}

Post parse_post(const json& obj, std::size_t line, bool allow_label) {
  if (allow_label) {
    detail::check_keys(obj, {"member_id", "post_id", "text", "thread_id", "timestamp", "label"}, "post", line);
  } else {
    detail::check_keys(obj, {"member_id", "post_id", "text", "thread_id", "timestamp"}, "post", line);
  }
  Post p;
  p.member_id = detail::require_string(obj, "member_id", "post", line);
  p.post_id = detail::require_string(obj, "post_id", "post", line);
  p.text = detail::require_string(obj, "text", "post", line);
  if (p.member_id.empty()) throw ParseError("post.member_id is empty", line);
  if (p.post_id.empty()) throw ParseError("post.post_id is empty", line);
  if (auto s = detail::optional_string(obj, "thread_id", "post", line); obj.contains("thread_id")) {
    p.thread_id = s;
  }
  if (auto s = detail::optional_string(obj, "timestamp", "post", line); obj.contains("timestamp")) {
    p.timestamp = s;
  }
  return p;
}

std::string validated_code(CharacteristicKind kind, const std::string& code, const Lexicon& lex,
                           const std::string& member) {
  if (kind != CharacteristicKind::education && lex.find_value(kind, code) == nullptr) {
    throw UnknownValueCode("member " + member + ": '" + code + "' is not a " +
                           std::string(to_string(kind)) + " value of the lexicon");
  }
  return code;
}

}  // namespace

CorpusMap parse_posts(std::string_view jsonl) {
  CorpusMap out;
  std::set<std::pair<std::string, std::string>> seen;
  for_each_jsonl(jsonl, [&](const json& obj, std::size_t line) {
    Post p = parse_post(obj, line, false);
    if (!seen.emplace(p.member_id, p.post_id).second) {
      throw DuplicatePost("line " + std::to_string(line) + ": duplicate post (" + p.member_id + ", " +
                          p.post_id + ")");
    }
    auto& corpus = out[p.member_id];
    corpus.member_id = p.member_id;
    corpus.posts.push_back(std::move(p));
  });
  return out;
}

CorpusMap ingest_posts(const std::filesystem::path& path) {
  return parse_posts(detail::read_file(path));
}

void parse_declared(CorpusMap& corpora, std::string_view jsonl, const Lexicon& lex) {
  std::set<std::string> seen;
  for_each_jsonl(jsonl, [&](const json& obj, std::size_t line) {
    detail::check_keys(obj, {"member_id", "declared"}, "declaration", line);
    DeclaredProfile d;
    d.member_id = detail::require_string(obj, "member_id", "declaration", line);
    if (d.member_id.empty()) throw ParseError("declaration.member_id is empty", line);
    if (!seen.insert(d.member_id).second) {
      throw ParseError("second declaration for member " + d.member_id, line);
    }
    const json& declared = detail::require(obj, "declared", "declaration", line);
    detail::check_keys(declared, {"gender", "age", "sphere", "education"}, "declaration.declared", line);
    for (auto kind : kAllKinds) {
      const std::string key(to_string(kind));
      auto it = declared.find(key);
      if (it == declared.end() || it->is_null()) continue;
      if (!it->is_string()) throw ParseError("declared." + key + ": expected a string", line);
      d.declared[kind] = validated_code(kind, it->get<std::string>(), lex, d.member_id);
    }
    auto& corpus = corpora[d.member_id];
    corpus.member_id = d.member_id;
    corpus.declared = std::move(d);
  });
}

CorpusMap attach_declared(CorpusMap corpora, const std::filesystem::path& path, const Lexicon& lex) {
  parse_declared(corpora, detail::read_file(path), lex);
  return corpora;
}

std::vector<LabeledCorpus> parse_labeled(std::string_view jsonl, const Lexicon& lex) {
  std::vector<LabeledCorpus> out;
  std::unordered_map<std::string, std::size_t> index;
  std::set<std::pair<std::string, std::string>> seen;
  for_each_jsonl(jsonl, [&](const json& obj, std::size_t line) {
    Post p = parse_post(obj, line, true);
    const json& label = detail::require(obj, "label", "post", line);
    detail::check_keys(label, {"kind", "code"}, "post.label", line);
    const std::string kind_text = detail::require_string(label, "kind", "post.label", line);
    const auto kind = parse_kind(kind_text);
    if (!kind || !is_scoreable(*kind)) {
      throw ParseError("post.label.kind: '" + kind_text + "' is not a scoreable kind", line);
    }
    const std::string code =
        validated_code(*kind, detail::require_string(label, "code", "post.label", line), lex, p.member_id);

    if (!seen.emplace(p.member_id, p.post_id).second) {
      throw DuplicatePost("line " + std::to_string(line) + ": duplicate post (" + p.member_id + ", " +
                          p.post_id + ")");
    }
    auto [it, inserted] = index.try_emplace(p.member_id, out.size());
    if (inserted) {
      out.push_back({});
      out.back().corpus.member_id = p.member_id;
    }
    LabeledCorpus& entry = out[it->second];
    auto [lit, fresh] = entry.labels.try_emplace(*kind, code);
    if (!fresh && lit->second != code) {
      throw ConflictingLabel("line " + std::to_string(line) + ": member " + p.member_id + " labeled both '" +
                             lit->second + "' and '" + code + "' for " + kind_text);
    }
    entry.corpus.posts.push_back(std::move(p));
  });
  return out;
}

std::vector<LabeledCorpus> ingest_labeled(const std::filesystem::path& path, const Lexicon& lex) {
  return parse_labeled(detail::read_file(path), lex);
}

std::string post_to_jsonl(const Post& post) {
  detail::ordered_json j;
  j["member_id"] = post.member_id;
  j["post_id"] = post.post_id;
  j["text"] = post.text;
  if (post.thread_id) j["thread_id"] = *post.thread_id;
  if (post.timestamp) j["timestamp"] = *post.timestamp;
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

}  // namespace lexiprof
