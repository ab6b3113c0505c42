#include "coref/report.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "coref/errors.hpp"

namespace coref {

using nlohmann::json;

CorpusScore score_corpus(std::span<const ScoringInput> docs) {
  CorpusScore out;
  std::vector<PairCounts> counts;
  std::vector<BCubed> b3;
  for (const auto& doc : docs) {
    DocumentScore row;
    row.id = doc.id;
    try {
      row.pairs = pairwise_counts(doc.system, doc.gold);
      row.pairwise = score_from_counts(row.pairs);
      if (doc.gold.size() > 0) row.b3 = b_cubed_doc(doc.system, doc.gold);
    } catch (const UsageError& e) {
      row.error = e.what();
      ++out.failures;
      out.per_doc.push_back(std::move(row));
      continue;
    }
    counts.push_back(row.pairs);
    if (row.b3) b3.push_back(*row.b3);
    out.per_doc.push_back(std::move(row));
  }
  out.pairwise = pairwise_micro(counts);
  out.b3 = b3.empty() ? Score{1.0, 1.0, 1.0} : b_cubed_macro(b3);
  return out;
}

void add_failed_document(CorpusScore& score, std::string id, std::string error) {
  DocumentScore row;
  row.id = std::move(id);
  row.error = std::move(error);
  score.per_doc.push_back(std::move(row));
  ++score.failures;
}

std::string format_score_report(const CorpusScore& score) {
  std::string out;
  out += fmt::format("{:<24} {:>7} {:>7} {:>7} {:>5} {:>5} {:>5} {:>7} {:>7} {:>7}\n", "document",
                     "pair_P", "pair_R", "pair_F", "TP", "FP", "FN", "b3_P", "b3_R", "b3_F");
  for (const auto& d : score.per_doc) {
    if (d.error) {
      out += fmt::format("{:<24} ERROR {}\n", d.id, *d.error);
      continue;
    }
    out += fmt::format("{:<24} {:>7.4f} {:>7.4f} {:>7.4f} {:>5} {:>5} {:>5}", d.id,
                       d.pairwise.precision, d.pairwise.recall, d.pairwise.f1, d.pairs.tp,
                       d.pairs.fp, d.pairs.fn);
    if (d.b3) {
      out += fmt::format(" {:>7.4f} {:>7.4f} {:>7.4f}\n", d.b3->precision, d.b3->recall,
                         f_measure(d.b3->precision, d.b3->recall));
    } else {
      out += fmt::format(" {:>7} {:>7} {:>7}\n", "-", "-", "-");
    }
  }
  out += fmt::format("pairwise (micro)  P={:.4f} R={:.4f} F={:.4f}\n", score.pairwise.precision,
                     score.pairwise.recall, score.pairwise.f1);
  out += fmt::format("B3 (macro)        P={:.4f} R={:.4f} F={:.4f}\n", score.b3.precision,
                     score.b3.recall, score.b3.f1);
  if (score.failures > 0) out += fmt::format("failed documents: {}\n", score.failures);
  return out;
}

json score_report_json(const CorpusScore& score) {
  json per_doc = json::array();
  for (const auto& d : score.per_doc) {
    json row{{"id", d.id}};
    if (d.error) {
      row["error"] = *d.error;
    } else {
      row["pairwise"] = {{"p", d.pairwise.precision}, {"r", d.pairwise.recall},
                         {"f", d.pairwise.f1},        {"tp", d.pairs.tp},
                         {"fp", d.pairs.fp},          {"fn", d.pairs.fn}};
      if (d.b3) {
        row["b3"] = {{"p", d.b3->precision},
                     {"r", d.b3->recall},
                     {"f", f_measure(d.b3->precision, d.b3->recall)}};
      } else {
        row["b3"] = nullptr;
      }
    }
    per_doc.push_back(std::move(row));
  }
  return json{{"pairwise", {{"p", score.pairwise.precision}, {"r", score.pairwise.recall},
                            {"f", score.pairwise.f1}}},
              {"b3", {{"p", score.b3.precision}, {"r", score.b3.recall}, {"f", score.b3.f1}}},
              {"per_doc", std::move(per_doc)}};
}

TraceReport trace_report(std::span<const TraceInput> docs, int min_pronoun_count) {
  TraceReport report;
  std::map<Rule, RuleTally> rules;
  for (Rule r : kAllRules) rules[r].rule = r;
  std::map<std::string, PronounTally> pronouns;

  for (const auto& doc : docs) {
    if (doc.gold_labels) report.has_gold = true;
    for (const auto& d : doc.decisions) {
      ++report.total_decisions;
      auto& tally = rules[d.rule];
      ++tally.total;
      const Mention& m = doc.mentions[d.mention];
      PronounTally* form = nullptr;
      if (m.kind == MentionKind::Pronoun) {
        auto key = fold_case(m.head_word);
        form = &pronouns[key];
        form->form = key;
        ++form->total;
      }
      if (!doc.gold_labels) continue;
      const auto& gold = *doc.gold_labels;
      const auto label = gold[d.mention];
      if (!label) continue;
      bool correct = false;
      if (d.antecedent) {
        correct = gold[*d.antecedent] == label;
      } else {
        correct = true;
        for (const auto& other : doc.mentions) {
          if (other.id < m.id && gold[other.id] == label) {
            correct = false;
            break;
          }
        }
      }
      ++(correct ? tally.correct : tally.incorrect);
      if (form) ++(correct ? form->correct : form->incorrect);
    }
  }

  for (Rule r : kAllRules) report.rules.push_back(rules[r]);
  for (auto& [key, tally] : pronouns) {
    if (tally.total >= min_pronoun_count) report.pronouns.push_back(tally);
  }
  if (report.has_gold) {
    std::stable_sort(report.pronouns.begin(), report.pronouns.end(),
                     [](const PronounTally& a, const PronounTally& b) {
                       return a.accuracy() < b.accuracy();
                     });
  }
  return report;
}

std::string format_trace_report(const TraceReport& report) {
  std::string out;
  out += fmt::format("{:<16} {:>7}", "decision", "total");
  if (report.has_gold) out += fmt::format(" {:>7} {:>9} {:>8}", "correct", "incorrect", "accuracy");
  out += '\n';
  for (const auto& r : report.rules) {
    out += fmt::format("{:<16} {:>7}", to_string(r.rule), r.total);
    if (report.has_gold) {
      const int judged = r.correct + r.incorrect;
      out += fmt::format(" {:>7} {:>9}", r.correct, r.incorrect);
      out += judged > 0 ? fmt::format(" {:>7.1f}%", 100.0 * r.correct / judged)
                        : fmt::format(" {:>8}", "-");
    }
    out += '\n';
  }
  out += fmt::format("{:<16} {:>7}\n", "all", report.total_decisions);
  if (!report.pronouns.empty()) {
    out += '\n';
    out += fmt::format("{:<16} {:>7}", "pronoun", "total");
    if (report.has_gold) out += fmt::format(" {:>7} {:>9} {:>8}", "correct", "incorrect", "accuracy");
    out += '\n';
    for (const auto& p : report.pronouns) {
      out += fmt::format("{:<16} {:>7}", p.form, p.total);
      if (report.has_gold) {
        const int judged = p.correct + p.incorrect;
        out += fmt::format(" {:>7} {:>9}", p.correct, p.incorrect);
        out += judged > 0 ? fmt::format(" {:>7.1f}%", 100.0 * p.accuracy())
                          : fmt::format(" {:>8}", "-");
      }
      out += '\n';
    }
  }
  return out;
}

json trace_report_json(const TraceReport& report) {
  json rules = json::array();
  for (const auto& r : report.rules) {
    json row{{"rule", to_string(r.rule)}, {"total", r.total}};
    if (report.has_gold) {
      row["correct"] = r.correct;
      row["incorrect"] = r.incorrect;
    }
    rules.push_back(std::move(row));
  }
  json pronouns = json::array();
  for (const auto& p : report.pronouns) {
    json row{{"form", p.form}, {"total", p.total}};
    if (report.has_gold) {
      row["correct"] = p.correct;
      row["incorrect"] = p.incorrect;
      row["accuracy"] = p.accuracy();
    }
    pronouns.push_back(std::move(row));
  }
  return json{{"total", report.total_decisions},
              {"rules", std::move(rules)},
              {"pronouns", std::move(pronouns)}};
}

}  // namespace coref
