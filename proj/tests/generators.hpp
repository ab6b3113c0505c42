#pragma once

// Seeded random inputs for the property tests: bracketed trees, partitions,
// decision sequences, and a small synthetic corpus with known gold entities.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coref/cluster.hpp"
#include "coref/pipeline.hpp"
#include "coref/resolve.hpp"

namespace coref::testing {

inline int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <class T>
const T& pick(std::mt19937& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(items.size()) - 1))];
}

// A random well-formed tree in canonical form. Leaves are "(TAG wN)".
inline std::string random_ptb(std::mt19937& rng, int max_depth, int& next_token) {
  static const std::vector<std::string> phrasal = {"S", "NP", "VP", "PP", "SBAR", "ADJP", "NP-SBJ", "NML"};
  static const std::vector<std::string> tags = {"NN", "NNS", "NNP", "DT", "JJ", "VBD", "IN", "PRP", "PRP$", "CC", "POS", ","};
  if (max_depth == 0 || uniform(rng, 0, 3) == 0) {
    return "(" + pick(rng, tags) + " w" + std::to_string(next_token++) + ")";
  }
  std::string out = "(" + pick(rng, phrasal);
  const int kids = uniform(rng, 1, 4);
  for (int i = 0; i < kids; ++i) out += " " + random_ptb(rng, max_depth - 1, next_token);
  return out + ")";
}

inline std::string random_ptb(std::mt19937& rng, int max_depth = 5) {
  int next = 0;
  return "(ROOT " + random_ptb(rng, max_depth, next) + ")";
}

// Labels in 0..k-1 for n items, k drawn at random.
inline std::vector<int> random_labels(std::mt19937& rng, int n) {
  const int k = uniform(rng, 1, std::max(1, n));
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (auto& l : labels) l = uniform(rng, 0, k - 1);
  return labels;
}

// Distinct, shuffled mention ids.
inline std::vector<MentionId> random_universe(std::mt19937& rng, int n) {
  std::vector<MentionId> ids;
  int next = uniform(rng, 0, 5);
  for (int i = 0; i < n; ++i) {
    ids.push_back(next);
    next += uniform(rng, 1, 3);
  }
  std::shuffle(ids.begin(), ids.end(), rng);
  return ids;
}

// Each mention of 0..n-1 either links to an earlier id or stays NULL.
inline std::vector<Decision> random_decisions(std::mt19937& rng, int n) {
  std::vector<Decision> out;
  for (int i = 0; i < n; ++i) {
    Decision d;
    d.mention = i;
    if (i > 0 && uniform(rng, 0, 2) != 0) {
      d.antecedent = uniform(rng, 0, i - 1);
      d.rule = Rule::PronounResolve;
    }
    out.push_back(d);
  }
  return out;
}

// A synthetic document built from four sentence templates. Every gold
// mention is an NP (or PRP$) the parse yields, so automatic extraction and
// the gold span list coincide. Pronouns corefer with the most recent person
// of their gender, "it" with the most recent object.
inline DocumentInput synthetic_document(std::mt19937& rng, const std::string& id) {
  struct Person {
    std::string name;
    bool male;
  };
  static const std::vector<Person> people = {{"John", true},  {"Fred", true},  {"George", true},
                                             {"David", true}, {"Mary", false}, {"Susan", false}};
  static const std::vector<std::string> verbs = {"bought", "sold", "found", "lost", "painted"};
  static const std::vector<std::string> nouns = {"book", "car", "house", "letter", "report"};

  DocumentInput doc;
  doc.id = id;
  doc.gold_mentions.emplace();
  std::vector<int> entity_of;  // per gold mention
  int next_entity = 0;
  std::vector<std::pair<bool, int>> persons_seen;  // (male, entity), most recent last
  int last_object = -1;

  auto add_mention = [&](int s, int b, int e, int entity) {
    doc.gold_mentions->push_back({s, b, e});
    entity_of.push_back(entity);
  };
  std::map<std::string, int> entity_of_name;
  // A repeated name is the same person.
  auto introduce = [&](const Person& p) {
    auto [it, fresh] = entity_of_name.try_emplace(p.name, next_entity);
    if (fresh) ++next_entity;
    persons_seen.emplace_back(p.male, it->second);
    return it->second;
  };
  auto recent = [&](bool male) {
    for (auto it = persons_seen.rbegin(); it != persons_seen.rend(); ++it)
      if (it->first == male) return it->second;
    return -1;
  };
  auto annotate_noun = [&](int s, int t) {
    doc.annotations.push_back({s, t, std::string("noun.artifact"), std::nullopt});
  };

  const int sentences = uniform(rng, 3, 6);
  for (int s = 0; s < sentences; ++s) {
    int shape = s == 0 ? 0 : uniform(rng, 0, 3);
    // Templates that need an antecedent fall back to an introduction.
    if (shape == 1 && (persons_seen.empty() || last_object < 0)) shape = 0;
    if (shape == 2 && persons_seen.empty()) shape = 0;

    const std::string verb = pick(rng, verbs);
    const std::string noun = pick(rng, nouns);
    if (shape == 0) {
      // [Name] verb [the noun] .
      const Person& p = pick(rng, people);
      doc.sentences.push_back("(ROOT (S (NP (NNP " + p.name + ")) (VP (VBD " + verb +
                              ") (NP (DT the) (NN " + noun + "))) (. .)))");
      add_mention(s, 0, 1, introduce(p));
      last_object = next_entity++;
      add_mention(s, 2, 4, last_object);
      annotate_noun(s, 3);
    } else if (shape == 1) {
      // [he] verb [it] .
      const bool male = persons_seen.back().first;
      doc.sentences.push_back(std::string("(ROOT (S (NP (PRP ") + (male ? "he" : "she") +
                              ")) (VP (VBD " + verb + ") (NP (PRP it))) (. .)))");
      add_mention(s, 0, 1, recent(male));
      add_mention(s, 2, 3, last_object);
    } else if (shape == 2) {
      // [Name] said that [she] verb [the noun] .
      const Person& p = pick(rng, people);
      const int entity = introduce(p);
      add_mention(s, 0, 1, entity);
      const bool male = pick(rng, persons_seen).first;
      doc.sentences.push_back("(ROOT (S (NP (NNP " + p.name +
                              ")) (VP (VBD said) (SBAR (IN that) (S (NP (PRP " +
                              (male ? "he" : "she") + ")) (VP (VBD " + verb +
                              ") (NP (DT the) (NN " + noun + ")))))) (. .)))");
      add_mention(s, 3, 4, recent(male));
      last_object = next_entity++;
      add_mention(s, 5, 7, last_object);
      annotate_noun(s, 6);
    } else {
      // [Name] verb [[his] noun] .
      const Person& p = pick(rng, people);
      const int entity = introduce(p);
      add_mention(s, 0, 1, entity);
      doc.sentences.push_back("(ROOT (S (NP (NNP " + p.name + ")) (VP (VBD " + verb +
                              ") (NP (PRP$ " + (p.male ? "his" : "her") + ") (NN " + noun +
                              "))) (. .)))");
      last_object = next_entity++;
      add_mention(s, 2, 4, last_object);
      add_mention(s, 2, 3, entity);
      annotate_noun(s, 3);
    }
  }

  std::vector<std::vector<int>> clusters(static_cast<std::size_t>(next_entity));
  for (std::size_t i = 0; i < entity_of.size(); ++i)
    clusters[static_cast<std::size_t>(entity_of[i])].push_back(static_cast<int>(i));
  doc.gold_clusters.emplace();
  for (auto& c : clusters)
    if (!c.empty()) doc.gold_clusters->push_back(std::move(c));
  return doc;
}

inline std::vector<DocumentInput> synthetic_corpus(unsigned seed = 20240611u, int n = 20) {
  std::mt19937 rng(seed);
  std::vector<DocumentInput> docs;
  for (int i = 0; i < n; ++i) docs.push_back(synthetic_document(rng, "synth" + std::to_string(i)));
  return docs;
}

}  // namespace coref::testing
