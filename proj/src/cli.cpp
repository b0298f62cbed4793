#include "lexiprof/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>

#include "json_util.hpp"
#include "lexiprof/corpus.hpp"
#include "lexiprof/lexicon.hpp"
#include "lexiprof/report.hpp"
#include "lexiprof/scorer.hpp"
#include "lexiprof/synthetic.hpp"
#include "lexiprof/taxonomy.hpp"
#include "lexiprof/trainer.hpp"
#include "lexiprof/verifier.hpp"

namespace lexiprof::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_path(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing required option ") + flag);
}

Rational threshold_of(const RunConfig& cfg) {
  Rational t;
  try {
    t = parse_rational(cfg.threshold);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--threshold: ") + e.what());
  }
  if (sgn(t) < 0) throw UsageError("--threshold must be non-negative");
  return t;
}

CharacteristicKind kind_of(const RunConfig& cfg) {
  auto kind = parse_kind(cfg.kind);
  if (!kind || !is_scoreable(*kind)) throw UsageError("--kind must be gender, age or sphere");
  return *kind;
}

bool text_format(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "text") throw UsageError("--format must be json or text");
  return cfg.format == "text";
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& payload) {
  if (cfg.out.empty()) {
    out << payload;
  } else {
    detail::write_file(cfg.out, payload);
  }
}

ScoreOptions score_options(const RunConfig& cfg) {
  ScoreOptions options;
  options.threshold = threshold_of(cfg);
  options.binary_counts = cfg.binary_counts;
  return options;
}

// Applies a JSON config file to every option the command line left unset.
void apply_config(const std::string& path, const std::map<std::string, CLI::Option*>& options,
                  const std::map<std::string, std::function<void(const detail::json&)>>& setters) {
  const auto doc = detail::parse_json(detail::read_file(path));
  if (!doc.is_object()) throw ParseError("config: expected an object", 0);
  for (const auto& [key, value] : doc.items()) {
    auto setter = setters.find(key);
    if (setter == setters.end()) throw ParseError("config: unknown key '" + key + "'", 0);
    auto opt = options.find(key);
    if (opt != options.end() && opt->second != nullptr && opt->second->count() > 0) continue;
    try {
      setter->second(value);
    } catch (const detail::json::exception&) {
      throw ParseError("config: wrong type for '" + key + "'", 0);
    }
  }
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_path(cfg.lexicon, "<lexicon path>");
  const Lexicon lex = parse_lexicon_unvalidated(detail::read_file(cfg.lexicon));
  const auto violations = validate_lexicon(lex);
  out << render_violations_json(violations);
  for (const auto& v : violations) err << "violation: " << to_string(v) << '\n';
  return violations.empty() ? kExitOk : kExitData;
}

int cmd_build(const RunConfig& cfg, std::ostream&, std::ostream& err) {
  require_path(cfg.labeled, "--labeled");
  require_path(cfg.out, "--out");
  const CharacteristicKind kind = kind_of(cfg);
  TrainerConfig tc;
  tc.min_member_support = cfg.min_member_support;
  tc.min_class_posts = cfg.min_class_posts;
  tc.max_phrase_len = cfg.max_phrase_len;
  tc.top_k_markers_per_io = cfg.top_k;
  try {
    tc.smoothing = parse_rational(cfg.smoothing);
    tc.check();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const Lexicon base = cfg.base.empty() ? taxonomy::default_lexicon() : load_lexicon(cfg.base);
  const auto sample = ingest_labeled(cfg.labeled, base);
  const auto table = extract_candidates(sample, kind, tc);
  for (const auto& w : table.warnings) err << "warning: " << w << '\n';
  for (const auto& [code, cls] : table.per_value) {
    err << "class " << code << ": " << cls.doc_count << " members, " << cls.post_count << " posts, "
        << cls.markers.size() << " candidates\n";
  }
  const auto weights = weigh_candidates(table, tc);
  const IndicatorAssignment assignment = cfg.assignment.empty() ? IndicatorAssignment{} : load_assignment(cfg.assignment);
  const Lexicon lex = assemble_lexicon(weights, kind, assignment, base);
  if (auto violations = validate_lexicon(lex); !violations.empty()) {
    for (const auto& v : violations) err << "violation: " << to_string(v) << '\n';
    return kExitData;
  }
  save_lexicon(lex, cfg.out);
  return kExitOk;
}

int cmd_score(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require_path(cfg.posts, "--posts");
  require_path(cfg.lexicon, "--lexicon");
  const bool text = text_format(cfg);
  const ScoreOptions options = score_options(cfg);
  const Lexicon lex = load_lexicon(cfg.lexicon);
  CorpusMap corpora = ingest_posts(cfg.posts);
  if (!cfg.declared.empty()) corpora = attach_declared(std::move(corpora), cfg.declared, lex);
  const auto profiles = profile_all(corpora, lex, options, cfg.jobs);
  emit(cfg, out, text ? render_profiles_text(profiles) : render_profiles_json(profiles));

  if (!cfg.dump_matches.empty()) {
    const MarkerMatcher matcher(lex);
    std::string dump;
    for (const auto& [id, corpus] : corpora) {
      std::vector<MatchEvent> events;
      matcher.count(corpus, &events);
      dump += render_match_events_jsonl(id, events);
    }
    detail::write_file(cfg.dump_matches, dump);
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require_path(cfg.posts, "--posts");
  require_path(cfg.declared, "--declared");
  require_path(cfg.lexicon, "--lexicon");
  const bool text = text_format(cfg);
  const ScoreOptions options = score_options(cfg);
  const Lexicon lex = load_lexicon(cfg.lexicon);
  const CorpusMap corpora = attach_declared(ingest_posts(cfg.posts), cfg.declared, lex);
  const auto batch = verify_batch(corpora, lex, options, cfg.jobs);
  emit(cfg, out, text ? render_verification_text(batch) : render_verification_json(batch));
  return kExitOk;
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require_path(cfg.lexicon, "--lexicon");
  require_path(cfg.labeled, "--labeled");
  const bool text = text_format(cfg);
  const ScoreOptions options = score_options(cfg);
  const Lexicon lex = load_lexicon(cfg.lexicon);
  const auto holdout = ingest_labeled(cfg.labeled, lex);
  std::set<std::string> training;
  if (!cfg.train.empty()) {
    for (const auto& m : ingest_labeled(cfg.train, lex)) training.insert(m.corpus.member_id);
  }
  const auto report = holdout_validate(lex, holdout, options, training);
  emit(cfg, out, text ? render_evaluation_text(report) : render_evaluation_json(report));
  return kExitOk;
}

int cmd_generate(const RunConfig& cfg, std::ostream&, std::ostream& err) {
  require_path(cfg.out_dir, "--out-dir");
  SyntheticSpec spec;
  spec.kind = kind_of(cfg);
  spec.seed = cfg.seed;
  spec.members_per_class = cfg.members_per_class;
  spec.holdout_per_class = cfg.holdout_per_class;
  spec.posts_per_member = cfg.posts_per_member;
  spec.tokens_per_post = cfg.tokens_per_post;
  spec.planted_per_post = cfg.planted_per_post;
  spec.lie_rate = cfg.lie_rate;
  const auto corpus = generate_synthetic(spec);
  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);
  detail::write_file(dir / "train.jsonl", corpus.train_labeled);
  detail::write_file(dir / "holdout.jsonl", corpus.holdout_labeled);
  detail::write_file(dir / "holdout_posts.jsonl", corpus.holdout_posts);
  detail::write_file(dir / "holdout_declared.jsonl", corpus.holdout_declared);
  err << "wrote synthetic corpus to " << dir.string() << '\n';
  return kExitOk;
}

int cmd_taxonomy(const RunConfig& cfg, std::ostream& out) {
  emit(cfg, out, serialize_lexicon(taxonomy::default_lexicon()));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string config_path;

  CLI::App app{"Lexicon-based socio-demographic profiling of community members", "lexiprof"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON file supplying defaults for any option");
    sub->add_option("--jobs", cfg.jobs, "worker threads (0: all cores)");
  };
  auto score_flags = [&](CLI::App* sub) {
    sub->add_option("--threshold", cfg.threshold, "minimum decision margin (e.g. 1/20 or 0.05)");
    sub->add_flag("--binary-counts", cfg.binary_counts, "clamp marker counts to 0/1");
    sub->add_option("--format", cfg.format, "json or text");
    sub->add_option("--out", cfg.out, "write output here instead of stdout");
  };

  auto* build = app.add_subcommand("build-lexicon", "train a lexicon from a labeled sample");
  build->add_option("--labeled", cfg.labeled, "labeled posts (JSONL)");
  build->add_option("--kind", cfg.kind, "gender, age or sphere");
  build->add_option("--out", cfg.out, "output lexicon path");
  build->add_option("--assignment", cfg.assignment, "JSON map pattern -> indicator code");
  build->add_option("--base", cfg.base, "base lexicon (default: built-in taxonomy)");
  build->add_option("--min-support", cfg.min_member_support, "minimum members per candidate");
  build->add_option("--min-class-posts", cfg.min_class_posts, "warn below this many posts per class");
  build->add_option("--max-phrase-len", cfg.max_phrase_len, "longest n-gram candidate");
  build->add_option("--smoothing", cfg.smoothing, "add-k smoothing constant");
  build->add_option("--top-k", cfg.top_k, "markers kept per class");
  add_common(build);

  auto* score = app.add_subcommand("score", "compute profiles from posts");
  score->add_option("--posts", cfg.posts, "posts (JSONL)");
  score->add_option("--lexicon", cfg.lexicon, "lexicon file");
  score->add_option("--declared", cfg.declared, "declarations (JSONL), for education pass-through");
  score->add_option("--dump-matches", cfg.dump_matches, "write per-post match events (JSONL)");
  score_flags(score);
  add_common(score);

  auto* verify = app.add_subcommand("verify", "compare declared data with computed profiles");
  verify->add_option("--posts", cfg.posts, "posts (JSONL)");
  verify->add_option("--declared", cfg.declared, "declarations (JSONL)");
  verify->add_option("--lexicon", cfg.lexicon, "lexicon file");
  score_flags(verify);
  add_common(verify);

  auto* evaluate = app.add_subcommand("evaluate", "score a labeled holdout and report accuracy");
  evaluate->add_option("--lexicon", cfg.lexicon, "lexicon file");
  evaluate->add_option("--labeled", cfg.labeled, "labeled holdout posts (JSONL)");
  evaluate->add_option("--train", cfg.train, "training sample, checked for member overlap");
  score_flags(evaluate);
  add_common(evaluate);

  auto* validate = app.add_subcommand("validate-lexicon", "check a lexicon file against every invariant");
  validate->add_option("lexicon", cfg.lexicon, "lexicon file");

  auto* generate = app.add_subcommand("gen-synthetic", "write a seeded planted-vocabulary corpus");
  generate->group("");
  generate->add_option("--seed", cfg.seed, "random seed");
  generate->add_option("--out-dir", cfg.out_dir, "output directory");
  generate->add_option("--kind", cfg.kind, "gender, age or sphere");
  generate->add_option("--members-per-class", cfg.members_per_class);
  generate->add_option("--holdout-per-class", cfg.holdout_per_class);
  generate->add_option("--posts-per-member", cfg.posts_per_member);
  generate->add_option("--tokens-per-post", cfg.tokens_per_post);
  generate->add_option("--planted-per-post", cfg.planted_per_post);
  generate->add_option("--lie-rate", cfg.lie_rate, "fraction of false declarations");
  add_common(generate);

  auto* taxonomy_cmd = app.add_subcommand("gen-taxonomy", "write the built-in taxonomy skeleton");
  taxonomy_cmd->group("");
  taxonomy_cmd->add_option("--out", cfg.out, "output path (default: stdout)");

  // Config keys are long option names with dashes replaced by underscores.
  auto active_options = [&](CLI::App* sub) {
    std::map<std::string, CLI::Option*> active;
    for (auto* opt : sub->get_options()) {
      std::string name = opt->get_name();
      if (name.rfind("--", 0) == 0) name = name.substr(2);
      for (auto& c : name) c = c == '-' ? '_' : c;
      active.try_emplace(name, opt);
    }
    return active;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.subcommand = sub->get_name();

  try {
    if (!config_path.empty()) {
      using detail::json;
      std::map<std::string, std::function<void(const json&)>> setters = {
          {"posts", [&](const json& v) { cfg.posts = v.get<std::string>(); }},
          {"declared", [&](const json& v) { cfg.declared = v.get<std::string>(); }},
          {"labeled", [&](const json& v) { cfg.labeled = v.get<std::string>(); }},
          {"train", [&](const json& v) { cfg.train = v.get<std::string>(); }},
          {"lexicon", [&](const json& v) { cfg.lexicon = v.get<std::string>(); }},
          {"base", [&](const json& v) { cfg.base = v.get<std::string>(); }},
          {"assignment", [&](const json& v) { cfg.assignment = v.get<std::string>(); }},
          {"out", [&](const json& v) { cfg.out = v.get<std::string>(); }},
          {"out_dir", [&](const json& v) { cfg.out_dir = v.get<std::string>(); }},
          {"dump_matches", [&](const json& v) { cfg.dump_matches = v.get<std::string>(); }},
          {"kind", [&](const json& v) { cfg.kind = v.get<std::string>(); }},
          {"threshold", [&](const json& v) { cfg.threshold = v.is_string() ? v.get<std::string>() : v.dump(); }},
          {"format", [&](const json& v) { cfg.format = v.get<std::string>(); }},
          {"binary_counts", [&](const json& v) { cfg.binary_counts = v.get<bool>(); }},
          {"seed", [&](const json& v) { cfg.seed = v.get<std::uint64_t>(); }},
          {"jobs", [&](const json& v) { cfg.jobs = v.get<unsigned>(); }},
          {"min_support", [&](const json& v) { cfg.min_member_support = v.get<std::uint64_t>(); }},
          {"min_class_posts", [&](const json& v) { cfg.min_class_posts = v.get<std::uint64_t>(); }},
          {"max_phrase_len", [&](const json& v) { cfg.max_phrase_len = v.get<std::size_t>(); }},
          {"smoothing", [&](const json& v) { cfg.smoothing = v.is_string() ? v.get<std::string>() : v.dump(); }},
          {"top_k", [&](const json& v) { cfg.top_k = v.get<std::size_t>(); }},
          {"members_per_class", [&](const json& v) { cfg.members_per_class = v.get<std::size_t>(); }},
          {"holdout_per_class", [&](const json& v) { cfg.holdout_per_class = v.get<std::size_t>(); }},
          {"posts_per_member", [&](const json& v) { cfg.posts_per_member = v.get<std::size_t>(); }},
          {"tokens_per_post", [&](const json& v) { cfg.tokens_per_post = v.get<std::size_t>(); }},
          {"planted_per_post", [&](const json& v) { cfg.planted_per_post = v.get<std::size_t>(); }},
          {"lie_rate", [&](const json& v) { cfg.lie_rate = v.get<double>(); }},
      };
      apply_config(config_path, active_options(sub), setters);
    }

    if (cfg.subcommand == "validate-lexicon") return cmd_validate(cfg, out, err);
    if (cfg.subcommand == "build-lexicon") return cmd_build(cfg, out, err);
    if (cfg.subcommand == "score") return cmd_score(cfg, out, err);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out, err);
    if (cfg.subcommand == "evaluate") return cmd_evaluate(cfg, out, err);
    if (cfg.subcommand == "gen-taxonomy") return cmd_taxonomy(cfg, out);
    if (cfg.subcommand == "gen-synthetic") return cmd_generate(cfg, out, err);
    throw UsageError("unknown subcommand " + cfg.subcommand);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace lexiprof::cli
