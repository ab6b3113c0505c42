#pragma once

// Corpus scoring and decision traces.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coref/cluster.hpp"
#include "coref/mention.hpp"
#include "coref/resolve.hpp"
#include "coref/score.hpp"

namespace coref {

struct ScoringInput {
  std::string id;
  Clustering system;
  Clustering gold;
};

struct DocumentScore {
  std::string id;
  PairCounts pairs;
  Score pairwise;
  std::optional<BCubed> b3;  // absent for documents without mentions
  std::optional<std::string> error;
};

struct CorpusScore {
  Score pairwise;  // micro: pooled pair counts
  Score b3;        // macro: mean of per-document P and R
  std::vector<DocumentScore> per_doc;
  int failures = 0;
};

// Per-document failures (mismatched universes) are recorded and skipped; the
// rest of the corpus is still scored. With no scorable mentions at all the
// B-cubed scores are 1.0.
CorpusScore score_corpus(std::span<const ScoringInput> docs);

// Records a document that failed before scoring (unreadable input, say).
void add_failed_document(CorpusScore& score, std::string id, std::string error);

std::string format_score_report(const CorpusScore& score);
nlohmann::json score_report_json(const CorpusScore& score);

struct TraceInput {
  std::span<const Decision> decisions;
  std::span<const Mention> mentions;
  // Gold entity label of each mention by id; nullopt entries are mentions
  // without a gold twin. Absent when the document has no gold clusters.
  std::optional<std::vector<std::optional<int>>> gold_labels;
};

struct RuleTally {
  Rule rule = Rule::NullResolve;
  int total = 0;
  int correct = 0;
  int incorrect = 0;
};

struct PronounTally {
  std::string form;
  int total = 0;
  int correct = 0;
  int incorrect = 0;

  double accuracy() const {
    const int judged = correct + incorrect;
    return judged > 0 ? static_cast<double>(correct) / judged : 0.0;
  }
};

struct TraceReport {
  std::vector<RuleTally> rules;  // one entry per Rule, in kAllRules order
  std::vector<PronounTally> pronouns;
  int total_decisions = 0;
  bool has_gold = false;
};

// A decision with an antecedent is correct when both mentions share a gold
// entity. A NULL decision is correct when no earlier mention shares the
// mention's gold entity. Decisions on mentions without a gold twin are
// counted but not judged. Pronoun forms with fewer than min_pronoun_count
// occurrences are omitted; with gold the rest are sorted by accuracy,
// lowest first.
TraceReport trace_report(std::span<const TraceInput> docs, int min_pronoun_count = 1);

std::string format_trace_report(const TraceReport& report);
nlohmann::json trace_report_json(const TraceReport& report);

}  // namespace coref
