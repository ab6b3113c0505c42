#pragma once

// Hand-written parses of the worked examples used across the test suites,
// plus helpers for building typed documents from them.

#include <string>
#include <vector>

#include "coref/lexicon.hpp"
#include "coref/mention.hpp"
#include "coref/pipeline.hpp"
#include "coref/resolve.hpp"
#include "coref/treebank.hpp"

#ifndef COREF_TEST_DATA
#error "COREF_TEST_DATA must point at tests/data"
#endif

namespace coref::testing {

inline const Lexicon& test_lexicon() {
  static const Lexicon lex = Lexicon::load(std::string(COREF_TEST_DATA) + "/lexicon");
  return lex;
}

// John bought himself a book . Fred found out that John had also bought
// himself a computer . Next , he found out that John had not bought him
// anything .
inline const std::vector<std::string> kExampleOne = {
    "(ROOT (S (NP (NNP John)) (VP (VBD bought) (NP (PRP himself)) (NP (DT a) (NN book))) (. .)))",
    "(ROOT (S (NP (NNP Fred)) (VP (VBD found) (PRT (RP out)) (SBAR (IN that) (S (NP (NNP John)) "
    "(VP (VBD had) (ADVP (RB also)) (VP (VBN bought) (NP (PRP himself)) (NP (DT a) (NN computer))))))) "
    "(. .)))",
    "(ROOT (S (ADVP (RB Next)) (, ,) (NP (PRP he)) (VP (VBD found) (PRT (RP out)) (SBAR (IN that) "
    "(S (NP (NNP John)) (VP (VBD had) (RB not) (VP (VBN bought) (NP (PRP him)) (NP (NN anything))))))) "
    "(. .)))",
};

// Gold spans for example one, in document order, and its five entities.
inline const std::vector<GoldSpan> kExampleOneMentions = {
    {0, 0, 1}, {0, 2, 3}, {0, 3, 5},                // John himself [a book]
    {1, 0, 1}, {1, 4, 5}, {1, 8, 9}, {1, 9, 11},    // Fred John himself [a computer]
    {2, 2, 3}, {2, 6, 7}, {2, 10, 11}, {2, 11, 12}  // he John him anything
};
inline const std::vector<std::vector<int>> kExampleOneClusters = {
    {0, 1, 4, 5, 8}, {2}, {3, 7, 9}, {6}, {10}};

inline DocumentInput example_one_input(bool with_gold) {
  DocumentInput doc;
  doc.id = "example1";
  doc.sentences = kExampleOne;
  doc.annotations = {{0, 0, "noun.person", std::nullopt},
                     {0, 4, "noun.artifact", std::nullopt},
                     {1, 0, "noun.person", std::nullopt},
                     {1, 10, "noun.artifact", std::nullopt}};
  if (with_gold) {
    doc.gold_mentions = kExampleOneMentions;
    doc.gold_clusters = kExampleOneClusters;
  }
  return doc;
}

inline const std::string kLawrenceTribe =
    "(ROOT (S (NP (NP (NNP Lawrence) (NNP Tribe)) (, ,) (NP (DT the) (NNP Harvard) (NNP Law) "
    "(NNP School) (NN Professor)) (, ,)) (VP (VBD testified)) (. .)))";
inline const std::string kDavidBoies =
    "(ROOT (S (NP (NP (NNP David) (NNP Boies)) (, ,) (NP (NP (NNP Gore) (POS 's)) (JJ chief) "
    "(NN trial) (NN lawyer)) (, ,)) (VP (VBD argued)) (. .)))";
inline const std::string kGridironClub =
    "(ROOT (S (NP (DT The) (NNP Gridiron) (NNP Club)) (VP (VBZ is) (NP (NP (DT an) (NN organization)) "
    "(PP (IN of) (NP (CD 60) (NNP Washington) (NNS journalists))))) (. .)))";
inline const std::string kLameu =
    "(ROOT (S (NP (NNP Lameu)) (VP (VBD was) (NP (NP (DT the) (JJ first) (NNP NHL) (NN player)) "
    "(S (VP (TO to) (VP (VB become) (NP (DT a) (NN team) (NN owner))))))) (. .)))";
inline const std::string kKoetter =
    "(ROOT (S (NP (NNP Koetter)) (VP (MD may) (RB not) (VP (VB have) (VP (VBN been) "
    "(NP (NP (NNP Arizona) (NNP State) (POS 's)) (JJ top) (NN choice))))) (. .)))";
inline const std::string kBankIt =
    "(ROOT (S (NP (DT The) (NN bank)) (VP (VBD ruined) (NP (PRP it))) (. .)))";
inline const std::string kBankItself =
    "(ROOT (S (NP (DT The) (NN bank)) (VP (VBD ruined) (NP (PRP itself))) (. .)))";
inline const std::string kWalmart =
    "(ROOT (S (NP (NNP Walmart)) (VP (VBZ says) (SBAR (S (NP (NP (NNP Gitano)) (, ,) "
    "(NP (PRP$ its) (JJ top-selling) (NN brand)) (, ,)) (VP (VBZ is) (VP (VBG underselling)))))) "
    "(. .)))";
inline const std::string kToCallJohn =
    "(ROOT (S (S (VP (TO To) (VP (VB call) (NP (NNP John))))) (, ,) (NP (PRP he)) "
    "(VP (VBD picked) (PRT (RP up)) (NP (DT the) (NN phone))) (. .)))";
inline const std::string kBecauseJohn =
    "(ROOT (S (SBAR (IN Because) (S (NP (NNP John)) (VP (VBZ likes) (NP (NNS cars))))) (, ,) "
    "(NP (PRP he)) (VP (VBD bought) (NP (DT a) (NNP Ferrari))) (. .)))";
inline const std::string kJohnBoughtHimself =
    "(ROOT (S (NP (NNP John)) (VP (VBD bought) (NP (PRP himself)) (NP (DT a) (NN book))) (. .)))";
inline const std::string kRoleAppositive =
    "(ROOT (S (NP (NP (JJ Republican) (NN candidate)) (NP (NNP George) (NNP Bush))) "
    "(VP (VBD spoke)) (. .)))";
inline const std::string kRevisedAccounting =
    "(NP (NP (DT the) (JJ revised) (NN accounting)) (PP (IN of) (NP (DT the) (NN incident))))";

// While establishing a refuge for Catholics, who faced increasing
// persecution in Anglican England, the Calverts were also interested in
// creating profitable estates. To this end, and to avoid trouble with the
// British government, they also encouraged Protestant immigration.
inline const std::vector<std::string> kCalverts = {
    "(ROOT (S (SBAR (IN While) (S (VP (VBG establishing) (NP (NP (DT a) (NN refuge)) (PP (IN for) "
    "(NP (NP (NNPS Catholics)) (, ,) (SBAR (WHNP (WP who)) (S (VP (VBD faced) (NP (NP (VBG increasing) "
    "(NN persecution)) (PP (IN in) (NP (NNP Anglican) (NNP England))))))) (, ,))))))) (, ,) "
    "(NP (DT the) (NNPS Calverts)) (VP (VBD were) (ADVP (RB also)) (ADJP (JJ interested) (PP (IN in) "
    "(S (VP (VBG creating) (NP (JJ profitable) (NNS estates))))))) (. .)))",
    "(ROOT (S (PP (TO To) (NP (DT this) (NN end))) (, ,) (CC and) (S (VP (TO to) (VP (VB avoid) "
    "(NP (NP (NN trouble)) (PP (IN with) (NP (DT the) (JJ British) (NN government))))))) (, ,) "
    "(NP (PRP they)) (VP (ADVP (RB also)) (VBD encouraged) (NP (JJ Protestant) (NN immigration))) "
    "(. .)))",
};

// A parsed, typed document with its resolution context.
struct TypedDocument {
  DocumentTree tree;
  std::vector<Mention> mentions;

  TypedDocument(const std::vector<std::string>& sentences, const Lexicon& lex,
                const std::vector<TokenAnnotation>& annotations = {}) {
    std::vector<ParseNode> trees;
    for (const auto& s : sentences) {
      auto parsed = read_ptb(s);
      for (auto& t : parsed) trees.push_back(std::move(t));
    }
    tree = DocumentTree::link(std::move(trees));
    mentions = extract_mentions(tree);
    type_mentions(mentions, tree, AnnotationIndex(annotations), lex);
  }

  ResolutionContext context(const Lexicon& lex) const { return ResolutionContext(tree, mentions, lex); }

  // First mention (in document order) whose head word is `head`, starting the
  // search at the given occurrence.
  const Mention& by_head(std::string_view head, int occurrence = 0) const {
    for (const auto& m : mentions) {
      if (m.head_word == head && occurrence-- == 0) return m;
    }
    throw std::runtime_error("no mention headed by " + std::string(head));
  }
};

inline std::optional<MentionId> antecedent_of(const std::vector<Decision>& decisions, MentionId id) {
  for (const auto& d : decisions)
    if (d.mention == id) return d.antecedent;
  return std::nullopt;
}

}  // namespace coref::testing
