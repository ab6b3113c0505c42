#include "coref/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "coref/errors.hpp"
#include "coref/lexicon.hpp"
#include "coref/pipeline.hpp"
#include "coref/report.hpp"

#ifndef COREF_DEFAULT_RESOURCES
#define COREF_DEFAULT_RESOURCES "resources"
#endif

namespace coref::cli {

namespace {

using nlohmann::json;

const std::map<std::string, bool ResolveConfig::*>& config_fields() {
  static const std::map<std::string, bool ResolveConfig::*> fields = {
      {"use_word_lists", &ResolveConfig::use_word_lists},
      {"check_gender", &ResolveConfig::check_gender},
      {"check_personhood", &ResolveConfig::check_personhood},
      {"check_number", &ResolveConfig::check_number},
      {"resolve_pronouns", &ResolveConfig::resolve_pronouns},
      {"resolve_second_person", &ResolveConfig::resolve_second_person},
      {"allow_pro_pro_match", &ResolveConfig::allow_pro_pro_match},
      {"strict_typecheck", &ResolveConfig::strict_typecheck},
      {"check_grammatical_person", &ResolveConfig::check_grammatical_person},
      {"enable_role_appositive", &ResolveConfig::enable_role_appositive},
      {"pred_nom_exclude_modals", &ResolveConfig::pred_nom_exclude_modals},
  };
  return fields;
}

// Command-line switches shared by every subcommand.
struct CommonOptions {
  std::string config_file;
  std::string resources;
  std::string mentions = "auto";
  std::vector<std::string> inputs;

  bool remove_word_lists = false;
  bool remove_gender = false;
  bool remove_person = false;
  bool remove_number = false;
  bool never_resolve_pronouns = false;
  bool never_resolve_second = false;
  bool never_match_pro_pro = false;
  bool strict = false;
  bool check_gram_number = false;
  bool no_role_appositive = false;
  bool pred_nom_exclude_modals = false;

  void attach(CLI::App* app) {
    app->add_option("--config", config_file, "JSON file of configuration flags");
    app->add_option("--resources", resources,
                    std::string("Lexicon resource directory (default: $") + kResourceEnv +
                        " or the bundled resources)");
    app->add_option("--mentions", mentions, "Mention source: auto, parse or gold")
        ->check(CLI::IsMember({"auto", "parse", "gold"}));
    app->add_flag("--remove-word-lists", remove_word_lists, "Ignore name lists and titles");
    app->add_flag("--remove-gender-typecheck", remove_gender, "Skip the gender agreement filter");
    app->add_flag("--remove-person-typecheck", remove_person, "Skip the personhood agreement filter");
    app->add_flag("--remove-number-typecheck", remove_number, "Skip the number agreement filter");
    app->add_flag("--never-resolve-pronouns", never_resolve_pronouns, "Leave every pronoun unresolved");
    app->add_flag("--never-resolve-2nd-person", never_resolve_second, "Leave you/your/yours unresolved");
    app->add_flag("--never-match-pro-pro", never_match_pro_pro, "Forbid pronoun antecedents for pronouns");
    app->add_flag("--strict-typechecking", strict, "Reject candidates whose attribute is Unknown");
    app->add_flag("--check-gram-number", check_gram_number,
                  "Require matching grammatical person (first/second/third)");
    app->add_flag("--no-role-appositive", no_role_appositive, "Disable the role appositive rule");
    app->add_flag("--pred-nom-exclude-modals", pred_nom_exclude_modals, "No predicate nominatives under a modal");
  }

  ResolveConfig config() const {
    ResolveConfig cfg = config_file.empty() ? ResolveConfig{} : load_config(config_file);
    if (remove_word_lists) cfg.use_word_lists = false;
    if (remove_gender) cfg.check_gender = false;
    if (remove_person) cfg.check_personhood = false;
    if (remove_number) cfg.check_number = false;
    if (never_resolve_pronouns) cfg.resolve_pronouns = false;
    if (never_resolve_second) cfg.resolve_second_person = false;
    if (never_match_pro_pro) cfg.allow_pro_pro_match = false;
    if (strict) cfg.strict_typecheck = true;
    if (check_gram_number) cfg.check_grammatical_person = true;
    if (no_role_appositive) cfg.enable_role_appositive = false;
    if (pred_nom_exclude_modals) cfg.pred_nom_exclude_modals = true;
    return cfg;
  }

  std::string resource_dir() const {
    if (!resources.empty()) return resources;
    if (const char* env = std::getenv(kResourceEnv); env && *env) return env;
    return COREF_DEFAULT_RESOURCES;
  }

  MentionSource mention_source() const {
    if (mentions == "parse") return MentionSource::Parse;
    if (mentions == "gold") return MentionSource::Gold;
    return MentionSource::Auto;
  }
};

struct Processed {
  const DocumentInput* input;
  std::optional<PipelineResult> result;
  std::string error;
};

std::vector<Processed> process(const std::vector<DocumentInput>& docs, const ResolveConfig& cfg,
                               const Lexicon& lex, MentionSource source, std::ostream& err) {
  std::vector<Processed> out;
  out.reserve(docs.size());
  for (const auto& doc : docs) {
    Processed p{&doc, std::nullopt, {}};
    try {
      p.result = run_pipeline(doc, cfg, lex, source);
    } catch (const std::exception& e) {
      p.error = e.what();
      err << "error: " << p.error << '\n';
    }
    out.push_back(std::move(p));
  }
  return out;
}

int cmd_resolve(const CommonOptions& opts, bool render, std::ostream& out, std::ostream& err) {
  const auto cfg = opts.config();
  const auto lex = Lexicon::load(opts.resource_dir());
  const auto docs = read_document_paths(opts.inputs);
  int failures = 0;
  for (const auto& p : process(docs, cfg, lex, opts.mention_source(), err)) {
    if (!p.result) {
      ++failures;
      continue;
    }
    out << clusters_tsv(*p.result);
    if (render) {
      out << "# document " << p.result->doc_id << '\n';
      const std::string text = render_brackets(*p.result);
      std::size_t start = 0;
      while (start < text.size()) {
        auto nl = text.find('\n', start);
        out << "# " << text.substr(start, nl - start) << '\n';
        start = nl + 1;
      }
    }
  }
  return failures > 0 ? 1 : 0;
}

int cmd_score(const CommonOptions& opts, const std::string& system_file, bool as_json,
              std::ostream& out, std::ostream& err) {
  const auto docs = read_document_paths(opts.inputs);
  std::vector<ScoringInput> scorable;
  CorpusScore failed;

  auto gold_or_fail = [&](const DocumentInput& doc) -> std::optional<Clustering> {
    auto gold = gold_clustering(doc);
    if (!gold) {
      const std::string msg = "document '" + doc.id + "' has no gold clusters";
      err << "error: " << msg << '\n';
      add_failed_document(failed, doc.id, msg);
    }
    return gold;
  };

  if (!system_file.empty()) {
    std::ifstream in(system_file);
    if (!in) throw InputError("cannot open " + system_file);
    std::map<std::string, std::vector<ClusterRow>> rows;
    for (auto& [id, r] : read_clusters_tsv(in)) rows[id] = std::move(r);
    for (const auto& doc : docs) {
      auto gold = gold_or_fail(doc);
      if (!gold) continue;
      const auto it = rows.find(doc.id);
      const std::vector<ClusterRow> none;
      scorable.push_back({doc.id, align_rows_to_gold(it == rows.end() ? none : it->second, doc),
                          std::move(*gold)});
    }
  } else {
    const auto cfg = opts.config();
    const auto lex = Lexicon::load(opts.resource_dir());
    for (const auto& p : process(docs, cfg, lex, opts.mention_source(), err)) {
      if (!p.result) {
        add_failed_document(failed, p.input->id, p.error);
        continue;
      }
      auto gold = gold_or_fail(*p.input);
      if (!gold) continue;
      scorable.push_back({p.input->id, align_to_gold(*p.result, *p.input), std::move(*gold)});
    }
  }

  auto score = score_corpus(scorable);
  for (const auto& row : score.per_doc) {
    if (row.error) err << "error: document '" << row.id << "': " << *row.error << '\n';
  }
  for (auto& row : failed.per_doc) score.per_doc.push_back(std::move(row));
  score.failures += failed.failures;
  if (as_json) {
    out << score_report_json(score).dump(2) << '\n';
  } else {
    out << format_score_report(score);
  }
  return score.failures > 0 ? 1 : 0;
}

std::string span_text(const Mention& m) {
  return fmt::format("{}:{}-{}", m.sentence_index, m.span.begin, m.span.end);
}

int cmd_trace(const CommonOptions& opts, int min_count, bool as_json, bool list_decisions,
              std::ostream& out, std::ostream& err) {
  const auto cfg = opts.config();
  const auto lex = Lexicon::load(opts.resource_dir());
  const auto docs = read_document_paths(opts.inputs);
  const auto processed = process(docs, cfg, lex, opts.mention_source(), err);
  std::vector<TraceInput> traces;
  int failures = 0;
  for (const auto& p : processed) {
    if (!p.result) {
      ++failures;
      continue;
    }
    TraceInput t{p.result->decisions, p.result->mentions, std::nullopt};
    if (p.input->gold_clusters) t.gold_labels = gold_labels_for_mentions(*p.result, *p.input);
    traces.push_back(std::move(t));
  }
  const auto report = trace_report(traces, min_count);
  if (as_json) {
    auto j = trace_report_json(report);
    if (list_decisions) {
      json rows = json::array();
      for (const auto& p : processed) {
        if (!p.result) continue;
        for (const auto& d : p.result->decisions) {
          const auto& m = p.result->mentions[d.mention];
          rows.push_back({{"doc", p.result->doc_id},
                          {"mention", span_text(m)},
                          {"head", m.head_word},
                          {"antecedent", d.antecedent
                                             ? json(span_text(p.result->mentions[*d.antecedent]))
                                             : json(nullptr)},
                          {"rule", to_string(d.rule)}});
        }
      }
      j["decisions"] = std::move(rows);
    }
    out << j.dump(2) << '\n';
  } else {
    if (list_decisions) {
      for (const auto& p : processed) {
        if (!p.result) continue;
        for (const auto& d : p.result->decisions) {
          const auto& m = p.result->mentions[d.mention];
          out << p.result->doc_id << '\t' << span_text(m) << '\t' << m.head_word << '\t'
              << (d.antecedent ? span_text(p.result->mentions[*d.antecedent]) : "NULL") << '\t'
              << to_string(d.rule) << '\n';
        }
      }
      out << '\n';
    }
    out << format_trace_report(report);
  }
  return failures > 0 ? 1 : 0;
}

}  // namespace

ResolveConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw InputError("config " + path + ": expected a JSON object");
  ResolveConfig cfg;
  const auto& fields = config_fields();
  for (const auto& [key, value] : j.items()) {
    auto it = fields.find(key);
    if (it == fields.end()) throw InputError("config " + path + ": unknown key '" + key + "'");
    if (!value.is_boolean()) throw InputError("config " + path + ": '" + key + "' must be boolean");
    cfg.*(it->second) = value.get<bool>();
  }
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rule-based noun phrase coreference over constituency parses", "coref"};
  app.require_subcommand(1);

  CommonOptions resolve_opts;
  bool render = false;
  auto* resolve = app.add_subcommand("resolve", "Cluster mentions; print TSV (and bracketed text)");
  resolve_opts.attach(resolve);
  resolve->add_flag("--render", render, "Also print bracketed text as '#' comment lines");
  resolve->add_option("inputs", resolve_opts.inputs, "Document files or directories ('-' for stdin)")
      ->required();

  CommonOptions score_opts;
  std::vector<std::string> gold_inputs;
  std::string system_file;
  bool score_json = false;
  auto* score = app.add_subcommand("score", "Score system clusters against gold clusters");
  score_opts.attach(score);
  score->add_option("--gold", gold_inputs, "Documents carrying gold mentions and clusters");
  score->add_option("--system", system_file, "Score this clusters TSV instead of running the resolver");
  score->add_flag("--json", score_json, "Machine-readable output");
  score->add_option("inputs", score_opts.inputs, "More gold documents");

  CommonOptions trace_opts;
  int min_count = 1;
  bool trace_json = false;
  bool list_decisions = false;
  auto* trace = app.add_subcommand("trace", "Break decisions down by rule and pronoun form");
  trace_opts.attach(trace);
  trace->add_option("--min-count", min_count, "Hide pronoun forms seen fewer times")
      ->check(CLI::NonNegativeNumber);
  trace->add_flag("--json", trace_json, "Machine-readable output");
  trace->add_flag("--decisions", list_decisions, "List every decision");
  trace->add_option("inputs", trace_opts.inputs, "Document files or directories")->required();

  std::vector<std::string> argv_reversed(args.rbegin(), args.rend());
  if (!argv_reversed.empty()) argv_reversed.pop_back();  // program name
  try {
    app.parse(argv_reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return 2;
  }

  try {
    if (*resolve) return cmd_resolve(resolve_opts, render, out, err);
    if (*score) {
      score_opts.inputs.insert(score_opts.inputs.begin(), gold_inputs.begin(), gold_inputs.end());
      if (score_opts.inputs.empty()) {
        err << "usage error: score needs gold documents (--gold FILE or positional)\n";
        return 2;
      }
      return cmd_score(score_opts, system_file, score_json, out, err);
    }
    if (*trace) return cmd_trace(trace_opts, min_count, trace_json, list_decisions, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace coref::cli
