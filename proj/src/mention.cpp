#include "coref/mention.hpp"

#include <algorithm>
#include <tuple>

#include "coref/errors.hpp"

namespace coref {

std::string_view to_string(MentionKind k) {
  switch (k) {
    case MentionKind::Pronoun: return "Pronoun";
    case MentionKind::Nominal: return "Nominal";
    case MentionKind::Proper: return "Proper";
  }
  return "Nominal";
}

AnnotationIndex::AnnotationIndex(std::span<const TokenAnnotation> annotations) {
  for (const auto& a : annotations) by_position_[{a.sentence, a.token}] = a;
}

const TokenAnnotation* AnnotationIndex::find(int sentence, int token) const {
  auto it = by_position_.find({sentence, token});
  return it == by_position_.end() ? nullptr : &it->second;
}

namespace {

bool is_pronoun_tag(std::string_view tag) { return tag == "PRP" || tag == "PRP$"; }

Mention make_mention(const DocumentTree& doc, NodeId n, Span span) {
  const auto& node = doc.node(n);
  Mention m;
  m.node = n;
  m.sentence_index = node.sentence_index;
  m.span = span;
  m.head_leaf = doc.head_leaf(n);
  const auto& head = doc.node(m.head_leaf);
  m.head_word = head.token;
  m.head_tag = head.label;
  m.kind = classify_kind(m.head_tag);
  return m;
}

// True if an NP above n shares n's head token. Ancestors sharing the head
// form an unbroken chain, so the walk stops at the first one that does not.
bool has_np_above_with_same_head(const DocumentTree& doc, NodeId n) {
  const NodeId head = doc.head_leaf(n);
  auto parent = doc.node(n).parent;
  while (parent && !doc.node(*parent).is_link && doc.head_leaf(*parent) == head) {
    if (is_np_label(doc.node(*parent).label)) return true;
    parent = doc.node(*parent).parent;
  }
  return false;
}

}  // namespace

std::vector<Mention> extract_mentions(const DocumentTree& doc) {
  std::vector<std::pair<std::size_t, Mention>> found;
  const auto order = doc.preorder();
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    NodeId n = order[pos];
    const auto& node = doc.node(n);
    if (node.is_link) continue;
    const bool np = is_np_label(node.label);
    const bool pronoun_leaf = node.is_leaf() && is_pronoun_tag(node.label);
    if (!np && !pronoun_leaf) continue;
    if (has_np_above_with_same_head(doc, n)) continue;
    found.emplace_back(pos, make_mention(doc, n, node.span));
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    const Mention& x = a.second;
    const Mention& y = b.second;
    return std::tuple(x.sentence_index, x.span.begin, -x.span.end, a.first) <
           std::tuple(y.sentence_index, y.span.begin, -y.span.end, b.first);
  });
  std::vector<Mention> mentions;
  mentions.reserve(found.size());
  for (auto& [pos, m] : found) {
    m.id = static_cast<MentionId>(mentions.size());
    mentions.push_back(std::move(m));
  }
  return mentions;
}

std::vector<Mention> map_gold_mentions(const DocumentTree& doc, std::span<const GoldSpan> spans) {
  std::vector<Mention> mentions;
  mentions.reserve(spans.size());
  const auto order = doc.preorder();
  for (const auto& g : spans) {
    if (g.sentence < 0 || static_cast<std::size_t>(g.sentence) >= doc.sentence_count()) {
      throw InputError("gold mention sentence " + std::to_string(g.sentence) + " out of range");
    }
    const auto leaves = doc.sentence_leaves(g.sentence);
    if (g.start < 0 || g.end > static_cast<int>(leaves.size()) || g.start >= g.end) {
      throw InputError("gold mention span [" + std::to_string(g.start) + "," +
                       std::to_string(g.end) + ") invalid in sentence " +
                       std::to_string(g.sentence));
    }
    const Span want{g.start, g.end};
    std::optional<NodeId> best_np;
    std::optional<NodeId> best_any;
    std::optional<NodeId> exact_pronoun;
    // Pre-order visits ancestors first: "<" keeps the highest NP among those
    // with the tightest span (the node extraction would pick), "<=" the
    // deepest node overall.
    for (NodeId n : order) {
      const auto& node = doc.node(n);
      if (node.is_link || node.sentence_index != g.sentence || !node.span.contains(want)) continue;
      if (node.is_leaf() && is_pronoun_tag(node.label) && node.span == want) exact_pronoun = n;
      if (!best_any || node.span.size() <= doc.node(*best_any).span.size()) best_any = n;
      if (is_np_label(node.label) &&
          (!best_np || node.span.size() < doc.node(*best_np).span.size())) {
        best_np = n;
      }
    }
    const bool np_exact = best_np && doc.node(*best_np).span == want;
    NodeId chosen = np_exact        ? *best_np
                    : exact_pronoun ? *exact_pronoun
                    : best_np       ? *best_np
                                    : *best_any;
    Mention m = make_mention(doc, chosen, want);
    m.id = static_cast<MentionId>(mentions.size());
    mentions.push_back(std::move(m));
  }
  return mentions;
}

MentionKind classify_kind(std::string_view head_tag) {
  if (is_pronoun_tag(head_tag)) return MentionKind::Pronoun;
  if (head_tag == "NNP" || head_tag == "NNPS") return MentionKind::Proper;
  return MentionKind::Nominal;
}

Number infer_number(const Mention& m, const Lexicon& lex) {
  if (m.kind == MentionKind::Pronoun) {
    const auto* entry = lex.pronoun(m.head_word);
    return entry ? entry->number : Number::Unknown;
  }
  if (m.head_tag == "NN" || m.head_tag == "NNP") return Number::Singular;
  if (m.head_tag == "NNS" || m.head_tag == "NNPS") return Number::Plural;
  return Number::Unknown;
}

std::vector<std::string_view> mention_tokens(const Mention& m, const DocumentTree& doc) {
  std::vector<std::string_view> out;
  const auto leaves = doc.sentence_leaves(m.sentence_index);
  for (int i = m.span.begin; i < m.span.end && i < static_cast<int>(leaves.size()); ++i) {
    out.emplace_back(doc.node(leaves[i]).token);
  }
  return out;
}

Gender infer_gender(const Mention& m, const DocumentTree& doc, const Lexicon& lex,
                    bool use_word_lists) {
  if (m.kind == MentionKind::Pronoun) {
    const auto* entry = lex.pronoun(m.head_word);
    return entry ? entry->gender : Gender::Unknown;
  }
  if (!use_word_lists) return Gender::Unknown;
  const auto leaves = doc.sentence_leaves(m.sentence_index);
  for (int i = m.span.begin; i < m.span.end; ++i) {
    auto g = lex.title_gender(doc.node(leaves[i]).token);
    if (g && *g != Gender::Unknown) return *g;
  }
  // Names only count on proper-noun tokens, so "bill" or "mark" as common
  // nouns never assign a gender.
  for (int i = m.span.begin; i < m.span.end; ++i) {
    const auto& leaf = doc.node(leaves[i]);
    if (leaf.label != "NNP" && leaf.label != "NNPS") continue;
    auto g = lex.gender_of_first_name(leaf.token);
    if (g != Gender::Unknown) return g;
  }
  return Gender::Unknown;
}

namespace {

bool is_person_label(const TokenAnnotation& a) {
  if (a.supersense && *a.supersense == "noun.person") return true;
  if (a.ner) {
    auto ner = fold_case(*a.ner);
    if (ner == "person" || ner == "per" || ner == "b-per" || ner == "i-per") return true;
  }
  return false;
}

bool is_non_person_label(const TokenAnnotation& a) {
  if (a.supersense && a.supersense->starts_with("noun.") && *a.supersense != "noun.person") {
    return true;
  }
  if (a.ner && !a.ner->empty()) {
    auto ner = fold_case(*a.ner);
    return ner != "o" && ner != "person" && ner != "per" && ner != "b-per" && ner != "i-per";
  }
  return false;
}

}  // namespace

Personhood infer_personhood(const Mention& m, const DocumentTree& doc,
                            const AnnotationIndex& annotations, const Lexicon& lex,
                            bool use_word_lists) {
  if (m.kind == MentionKind::Pronoun) {
    const auto* entry = lex.pronoun(m.head_word);
    return entry ? entry->personhood : Personhood::Unknown;
  }
  const int head_token = doc.node(m.head_leaf).span.begin;
  const auto* head_annotation = annotations.find(m.sentence_index, head_token);
  if (head_annotation && is_person_label(*head_annotation)) return Personhood::Person;
  const Gender g = m.profile.gender;
  if (g == Gender::Male || g == Gender::Female) return Personhood::Person;
  if (use_word_lists) {
    for (auto token : mention_tokens(m, doc)) {
      if (lex.is_title(token)) return Personhood::Person;
    }
  }
  if (head_annotation && is_non_person_label(*head_annotation)) return Personhood::NotPerson;
  return Personhood::Unknown;
}

void type_mentions(std::vector<Mention>& mentions, const DocumentTree& doc,
                   const AnnotationIndex& annotations, const Lexicon& lex, bool use_word_lists) {
  for (auto& m : mentions) {
    m.kind = classify_kind(m.head_tag);
    m.profile.gender = infer_gender(m, doc, lex, use_word_lists);
    m.profile.number = infer_number(m, lex);
    m.profile.personhood = infer_personhood(m, doc, annotations, lex, use_word_lists);
  }
}

GrammaticalPerson grammatical_person(const Mention& m, const Lexicon& lex) {
  if (m.kind != MentionKind::Pronoun) return GrammaticalPerson::Third;
  const auto* entry = lex.pronoun(m.head_word);
  return entry ? entry->person : GrammaticalPerson::Third;
}

}  // namespace coref
