#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "coref/errors.hpp"
#include "coref/report.hpp"
#include "coref/score.hpp"
#include "generators.hpp"

using namespace coref;
using namespace coref::testing;

namespace {

Clustering make(std::vector<MentionId> u, std::vector<int> labels) { return Clustering(std::move(u), labels); }

// gold {a,b,c},{d}; system {a,b},{c,d}
const Clustering kGold = make({0, 1, 2, 3}, {0, 0, 0, 1});
const Clustering kSys = make({0, 1, 2, 3}, {0, 0, 1, 1});

}  // namespace

TEST(Pairwise, WorkedExample) {
  const auto c = pairwise_counts(kSys, kGold);
  EXPECT_EQ(c, (PairCounts{1, 1, 2}));
  const auto s = score_from_counts(c);
  EXPECT_DOUBLE_EQ(s.precision, 0.5);
  EXPECT_DOUBLE_EQ(s.recall, 1.0 / 3.0);
  EXPECT_NEAR(s.f1, 0.4, 1e-12);
}

TEST(Pairwise, MicroAveragingPoolsCounts) {
  const std::vector<PairCounts> docs = {{1, 0, 0}, {0, 1, 2}};
  const auto s = pairwise_micro(docs);
  EXPECT_DOUBLE_EQ(s.precision, 0.5);
  EXPECT_DOUBLE_EQ(s.recall, 1.0 / 3.0);
  EXPECT_NEAR(s.f1, 0.4, 1e-12);
}

TEST(Pairwise, ZeroDenominatorRule) {
  const auto empty = score_from_counts({0, 0, 0});
  EXPECT_EQ(empty.precision, 1.0);
  EXPECT_EQ(empty.recall, 1.0);
  EXPECT_EQ(empty.f1, 1.0);
  // System proposed nothing but gold has links: precision 0, recall 0.
  const auto missed = score_from_counts({0, 0, 3});
  EXPECT_EQ(missed.precision, 0.0);
  EXPECT_EQ(missed.recall, 0.0);
  EXPECT_EQ(missed.f1, 0.0);
  const auto spurious = score_from_counts({0, 2, 0});
  EXPECT_EQ(spurious.precision, 0.0);
  EXPECT_EQ(spurious.recall, 0.0);
  EXPECT_EQ(pairwise_micro({}).f1, 1.0);
}

TEST(Pairwise, AllSingletonSystem) {
  const auto sys = make({0, 1, 2, 3}, {0, 1, 2, 3});
  const auto c = pairwise_counts(sys, kGold);
  EXPECT_EQ(c.tp, 0);
  EXPECT_EQ(c.fp, 0);
  EXPECT_EQ(c.fn, 3);
}

TEST(Pairwise, MismatchNamesTheIds) {
  const auto other = make({0, 1, 2, 7}, {0, 0, 0, 1});
  try {
    pairwise_counts(kSys, other);
    FAIL() << "expected UsageError";
  } catch (const UsageError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find('3'), std::string::npos) << msg;
    EXPECT_NE(msg.find('7'), std::string::npos) << msg;
  }
  EXPECT_THROW(b_cubed_doc(kSys, other), UsageError);
}

TEST(BCubed, WorkedExample) {
  const auto b = b_cubed_doc(kSys, kGold);
  EXPECT_DOUBLE_EQ(b.precision, 0.75);
  EXPECT_NEAR(b.recall, 2.0 / 3.0, 1e-15);
  const std::vector<BCubed> one = {b};
  EXPECT_NEAR(b_cubed_macro(one).f1, 2 * 0.75 * (2.0 / 3.0) / (0.75 + 2.0 / 3.0), 1e-12);
  EXPECT_NEAR(b_cubed_macro(one).f1, 0.7059, 1e-4);
}

TEST(BCubed, SingletonsAgainstOneEntity) {
  const auto sys = make({0, 1, 2, 3, 4}, {0, 1, 2, 3, 4});
  const auto gold = make({0, 1, 2, 3, 4}, {0, 0, 0, 0, 0});
  const auto b = b_cubed_doc(sys, gold);
  EXPECT_DOUBLE_EQ(b.precision, 1.0);
  EXPECT_DOUBLE_EQ(b.recall, 0.2);
}

TEST(BCubed, MacroAveraging) {
  const std::vector<BCubed> docs = {{1.0, 0.5}, {0.5, 1.0}};
  const auto s = b_cubed_macro(docs);
  EXPECT_DOUBLE_EQ(s.precision, 0.75);
  EXPECT_DOUBLE_EQ(s.recall, 0.75);
  EXPECT_DOUBLE_EQ(s.f1, 0.75);
  EXPECT_THROW(b_cubed_macro({}), UsageError);
  EXPECT_THROW(b_cubed_doc(Clustering{}, Clustering{}), UsageError);
}

TEST(Score, FMeasure) {
  EXPECT_EQ(f_measure(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(f_measure(1, 1), 1.0);
  EXPECT_DOUBLE_EQ(f_measure(0.5, 1.0), 2.0 / 3.0);
}

TEST(Score, BoundsAndPermutationInvariance) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = uniform(rng, 1, 8);
    const auto u = random_universe(rng, n);
    const auto sl = random_labels(rng, n);
    const auto gl = random_labels(rng, n);
    const Clustering sys(u, sl), gold(u, gl);
    const auto pw = score_from_counts(pairwise_counts(sys, gold));
    const auto b = b_cubed_doc(sys, gold);
    for (double v : {pw.precision, pw.recall, pw.f1, b.precision, b.recall}) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
    ASSERT_LE(pw.f1, std::max(pw.precision, pw.recall) + 1e-15);

    // Relabel entities and reorder mentions: nothing changes.
    std::vector<std::size_t> perm(u.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<MentionId> pu;
    std::vector<int> psl, pgl;
    for (auto k : perm) {
      pu.push_back(u[k]);
      psl.push_back(sl[k] * 7 + 100);
      pgl.push_back(-gl[k]);
    }
    const Clustering psys(pu, psl), pgold(pu, pgl);
    ASSERT_EQ(pairwise_counts(psys, pgold), pairwise_counts(sys, gold));
    const auto pb = b_cubed_doc(psys, pgold);
    ASSERT_NEAR(pb.precision, b.precision, 1e-12);
    ASSERT_NEAR(pb.recall, b.recall, 1e-12);

    // Identity scores perfectly.
    ASSERT_EQ(pairwise_counts(gold, gold).fp, 0);
    ASSERT_EQ(pairwise_counts(gold, gold).fn, 0);
    ASSERT_DOUBLE_EQ(b_cubed_doc(gold, gold).recall, 1.0);
  }
}

TEST(ScoreCorpus, PerfectAndWorked) {
  const std::vector<ScoringInput> perfect = {{"a", kGold, kGold}, {"b", kSys, kSys}};
  const auto p = score_corpus(perfect);
  for (double v : {p.pairwise.precision, p.pairwise.recall, p.pairwise.f1, p.b3.precision, p.b3.recall, p.b3.f1})
    EXPECT_EQ(v, 1.0);

  const std::vector<ScoringInput> worked = {{"w", kSys, kGold}};
  const auto w = score_corpus(worked);
  EXPECT_NEAR(w.pairwise.precision, 0.5, 1e-4);
  EXPECT_NEAR(w.pairwise.recall, 0.3333, 1e-4);
  EXPECT_NEAR(w.pairwise.f1, 0.4, 1e-4);
  EXPECT_NEAR(w.b3.precision, 0.75, 1e-4);
  EXPECT_NEAR(w.b3.recall, 0.6667, 1e-4);
  EXPECT_NEAR(w.b3.f1, 0.7059, 1e-4);
}

TEST(ScoreCorpus, MicroPairsMacroB3) {
  // A big perfect document and a small bad one.
  const auto big = make({0, 1, 2, 3, 4, 5}, {0, 0, 0, 0, 0, 0});
  const auto small_gold = make({0, 1}, {0, 0});
  const auto small_sys = make({0, 1}, {0, 1});
  const std::vector<ScoringInput> docs = {{"big", big, big}, {"small", small_sys, small_gold}};
  const auto s = score_corpus(docs);
  // 15 true pairs + 1 missed pair, pooled.
  EXPECT_DOUBLE_EQ(s.pairwise.recall, 15.0 / 16.0);
  // B3 recall: mean of 1.0 and 0.5.
  EXPECT_DOUBLE_EQ(s.b3.recall, 0.75);
}

TEST(ScoreCorpus, MismatchIsPerDocument) {
  const std::vector<ScoringInput> docs = {{"ok", kGold, kGold},
                                          {"bad", make({0, 1}, {0, 0}), make({0, 2}, {0, 0})}};
  const auto s = score_corpus(docs);
  EXPECT_EQ(s.failures, 1);
  ASSERT_EQ(s.per_doc.size(), 2u);
  EXPECT_TRUE(s.per_doc[1].error.has_value());
  EXPECT_EQ(s.pairwise.f1, 1.0);
  const auto j = score_report_json(s);
  EXPECT_TRUE(j.contains("pairwise"));
  EXPECT_TRUE(j["b3"].contains("f"));
  EXPECT_EQ(j["per_doc"].size(), 2u);
  EXPECT_TRUE(j["per_doc"][1].contains("error"));
  EXPECT_NE(format_score_report(s).find("ERROR"), std::string::npos);
}

TEST(ScoreCorpus, NoMentions) {
  const std::vector<ScoringInput> docs = {{"empty", Clustering{}, Clustering{}}};
  const auto s = score_corpus(docs);
  EXPECT_EQ(s.failures, 0);
  EXPECT_EQ(s.pairwise.f1, 1.0);
  EXPECT_EQ(s.b3.f1, 1.0);
  EXPECT_FALSE(s.per_doc[0].b3.has_value());
}
