#include "coref/score.hpp"

#include <map>
#include <string>
#include <vector>

#include "coref/errors.hpp"

namespace coref {

namespace {

void require_same_universe(const Clustering& sys, const Clustering& gold) {
  std::vector<MentionId> only_sys;
  std::vector<MentionId> only_gold;
  for (MentionId id : sys.universe())
    if (!gold.contains(id)) only_sys.push_back(id);
  for (MentionId id : gold.universe())
    if (!sys.contains(id)) only_gold.push_back(id);
  if (only_sys.empty() && only_gold.empty()) return;
  std::string msg = "mention universes differ;";
  auto list = [&msg](std::string_view side, const std::vector<MentionId>& ids) {
    if (ids.empty()) return;
    msg += " only in ";
    msg += side;
    msg += ":";
    for (MentionId id : ids) msg += " " + std::to_string(id);
    msg += ";";
  };
  list("system", only_sys);
  list("gold", only_gold);
  msg.pop_back();
  throw UsageError(msg);
}

std::int64_t pairs(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

double f_measure(double precision, double recall) {
  return precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
}

PairCounts pairwise_counts(const Clustering& sys, const Clustering& gold) {
  require_same_universe(sys, gold);
  // Pairs in both = sum over (system entity, gold entity) cells of C(cell, 2).
  std::map<std::pair<int, int>, std::int64_t> cells;
  std::map<int, std::int64_t> sys_sizes;
  std::map<int, std::int64_t> gold_sizes;
  for (MentionId id : sys.universe()) {
    const int s = sys.label_of(id);
    const int g = gold.label_of(id);
    ++cells[{s, g}];
    ++sys_sizes[s];
    ++gold_sizes[g];
  }
  std::int64_t both = 0;
  std::int64_t sys_pairs = 0;
  std::int64_t gold_pairs = 0;
  for (const auto& [key, n] : cells) both += pairs(n);
  for (const auto& [key, n] : sys_sizes) sys_pairs += pairs(n);
  for (const auto& [key, n] : gold_sizes) gold_pairs += pairs(n);
  return PairCounts{both, sys_pairs - both, gold_pairs - both};
}

Score score_from_counts(const PairCounts& c) {
  const std::int64_t sys_pairs = c.tp + c.fp;
  const std::int64_t gold_pairs = c.tp + c.fn;
  Score s;
  s.precision = sys_pairs > 0 ? static_cast<double>(c.tp) / static_cast<double>(sys_pairs)
                              : (gold_pairs == 0 ? 1.0 : 0.0);
  s.recall = gold_pairs > 0 ? static_cast<double>(c.tp) / static_cast<double>(gold_pairs)
                            : (sys_pairs == 0 ? 1.0 : 0.0);
  s.f1 = f_measure(s.precision, s.recall);
  return s;
}

Score pairwise_micro(std::span<const PairCounts> counts) {
  PairCounts total;
  for (const auto& c : counts) total += c;
  return score_from_counts(total);
}

BCubed b_cubed_doc(const Clustering& sys, const Clustering& gold) {
  require_same_universe(sys, gold);
  if (sys.size() == 0) throw UsageError("B-cubed needs at least one mention");
  std::map<std::pair<int, int>, double> overlap;
  std::map<int, double> sys_sizes;
  std::map<int, double> gold_sizes;
  for (MentionId id : sys.universe()) {
    const int s = sys.label_of(id);
    const int g = gold.label_of(id);
    overlap[{s, g}] += 1.0;
    sys_sizes[s] += 1.0;
    gold_sizes[g] += 1.0;
  }
  double p = 0.0;
  double r = 0.0;
  for (MentionId id : sys.universe()) {
    const int s = sys.label_of(id);
    const int g = gold.label_of(id);
    const double shared = overlap[{s, g}];
    p += shared / sys_sizes[s];
    r += shared / gold_sizes[g];
  }
  const double n = static_cast<double>(sys.size());
  return BCubed{p / n, r / n};
}

Score b_cubed_macro(std::span<const BCubed> doc_scores) {
  if (doc_scores.empty()) throw UsageError("B-cubed macro average needs at least one document");
  double p = 0.0;
  double r = 0.0;
  for (const auto& d : doc_scores) {
    p += d.precision;
    r += d.recall;
  }
  const double n = static_cast<double>(doc_scores.size());
  Score s;
  s.precision = p / n;
  s.recall = r / n;
  s.f1 = f_measure(s.precision, s.recall);
  return s;
}

}  // namespace coref
