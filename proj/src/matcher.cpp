#include "lexiprof/matcher.hpp"

#include <algorithm>

namespace lexiprof {

namespace {

std::vector<std::string> split_spaces(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto sp = s.find(' ', pos);
    if (sp == std::string_view::npos) sp = s.size();
    if (sp > pos) out.emplace_back(s.substr(pos, sp - pos));
    pos = sp + 1;
  }
  return out;
}

}  // namespace

std::uint64_t count_literal(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return 0;
  std::uint64_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

MarkerMatcher::MarkerMatcher(const Lexicon& lex) {
  markers_.reserve(lex.markers.size());
  for (const auto& m : lex.markers) {
    Compiled c{m.id, m.kind, m.regulations, m.pattern, {}};
    const std::size_t idx = markers_.size();
    if (m.kind == MarkerKind::graphic) {
      graphic_markers_.push_back(idx);
    } else if (m.regulations.whole_token) {
      c.tokens = split_spaces(m.pattern);
      if (!c.tokens.empty()) by_first_token_[c.tokens.front()].push_back(idx);
    } else {
      substring_markers_.push_back(idx);
    }
    markers_.push_back(std::move(c));
  }
}

std::vector<std::uint64_t> MarkerMatcher::count_text(std::string_view text, const std::string& post_id,
                                                     std::vector<MatchEvent>* events) const {
  std::vector<std::uint64_t> counts(markers_.size(), 0);
  const TokenStream stream = tokenize(text);
  const auto& tokens = stream.tokens;

  // Whole-token phrases: contiguous folded token sequences, per-marker
  // leftmost non-overlapping.
  std::vector<std::size_t> next_free(markers_.size(), 0);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto it = by_first_token_.find(tokens[i].folded);
    if (it == by_first_token_.end()) continue;
    for (std::size_t idx : it->second) {
      const auto& pattern = markers_[idx].tokens;
      if (i < next_free[idx] || i + pattern.size() > tokens.size()) continue;
      bool match = true;
      for (std::size_t k = 1; k < pattern.size() && match; ++k) match = tokens[i + k].folded == pattern[k];
      if (!match) continue;
      ++counts[idx];
      next_free[idx] = i + pattern.size();
      if (events) events->push_back({post_id, markers_[idx].id, tokens[i].begin, tokens[i + pattern.size() - 1].end});
    }
  }

  // Substring markers run over the folded token text joined by single spaces.
  if (!substring_markers_.empty() && !tokens.empty()) {
    std::string joined;
    std::vector<std::size_t> starts;
    for (const auto& t : tokens) {
      if (!joined.empty()) joined.push_back(' ');
      starts.push_back(joined.size());
      joined += t.folded;
    }
    auto token_at = [&](std::size_t offset) {
      return static_cast<std::size_t>(std::upper_bound(starts.begin(), starts.end(), offset) - starts.begin()) - 1;
    };
    for (std::size_t idx : substring_markers_) {
      const std::string& needle = markers_[idx].pattern;
      for (auto pos = joined.find(needle); pos != std::string::npos; pos = joined.find(needle, pos + needle.size())) {
        ++counts[idx];
        if (events) {
          events->push_back({post_id, markers_[idx].id, tokens[token_at(pos)].begin,
                             tokens[token_at(pos + needle.size() - 1)].end});
        }
      }
    }
  }

  // Graphic markers run over the raw text.
  for (std::size_t idx : graphic_markers_) {
    const std::string& needle = markers_[idx].pattern;
    if (!events) {
      counts[idx] = count_literal(text, needle);
      continue;
    }
    for (auto pos = text.find(needle); pos != std::string_view::npos; pos = text.find(needle, pos + needle.size())) {
      ++counts[idx];
      events->push_back({post_id, markers_[idx].id, pos, pos + needle.size()});
    }
  }
  return counts;
}

MarkerCounts MarkerMatcher::count(const UserCorpus& corpus, std::vector<MatchEvent>* events) const {
  const std::size_t n = markers_.size();
  std::vector<std::vector<std::uint64_t>> per_post;
  per_post.reserve(corpus.posts.size());
  std::vector<MatchEvent> raw_events;
  for (const auto& post : corpus.posts) {
    per_post.push_back(count_text(post.text, post.post_id, events ? &raw_events : nullptr));
  }

  // Regulations: per-post thresholds first, then corpus-level ones.
  std::vector<bool> zeroed_marker(n, false);
  std::vector<std::vector<bool>> zeroed_post(per_post.size(), std::vector<bool>(n, false));
  for (std::size_t m = 0; m < n; ++m) {
    const auto& reg = markers_[m].regulations;
    if (reg.scope == MatchScope::per_post) {
      for (std::size_t p = 0; p < per_post.size(); ++p) {
        if (per_post[p][m] < reg.min_count) {
          zeroed_post[p][m] = per_post[p][m] > 0;
          per_post[p][m] = 0;
        }
      }
    } else {
      std::uint64_t total = 0;
      for (const auto& counts : per_post) total += counts[m];
      if (total < reg.min_count) {
        zeroed_marker[m] = true;
        for (auto& counts : per_post) counts[m] = 0;
      }
    }
  }

  MarkerCounts out;
  out.member_id = corpus.member_id;
  for (const auto& c : markers_) out.counts[c.id] = 0;
  for (std::size_t p = 0; p < per_post.size(); ++p) {
    auto& slot = out.per_post[corpus.posts[p].post_id];
    for (std::size_t m = 0; m < n; ++m) {
      if (per_post[p][m] == 0) continue;
      slot[markers_[m].id] = per_post[p][m];
      out.counts[markers_[m].id] += per_post[p][m];
    }
    if (slot.empty()) out.per_post.erase(corpus.posts[p].post_id);
  }

  if (events) {
    std::unordered_map<std::string, std::size_t> marker_index;
    for (std::size_t m = 0; m < n; ++m) marker_index.emplace(markers_[m].id, m);
    std::unordered_map<std::string, std::size_t> post_index;
    for (std::size_t p = 0; p < corpus.posts.size(); ++p) post_index.emplace(corpus.posts[p].post_id, p);
    for (auto& e : raw_events) {
      const std::size_t m = marker_index.at(e.marker_id);
      if (zeroed_marker[m] || zeroed_post[post_index.at(e.post_id)][m]) continue;
      events->push_back(std::move(e));
    }
  }
  return out;
}

MarkerCounts count_markers(const UserCorpus& corpus, const Lexicon& lex) {
  return MarkerMatcher(lex).count(corpus);
}

std::set<std::string> marker_list(const MarkerCounts& counts) {
  std::set<std::string> out;
  for (const auto& [id, n] : counts.counts) {
    if (n > 0) out.insert(id);
  }
  return out;
}

}  // namespace lexiprof
