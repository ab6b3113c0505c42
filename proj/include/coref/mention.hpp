#pragma once

// Mention identification and typing. A mention is the highest NP for its
// head token; possessive pronouns (PRP$) that head no NP are mentions on
// their own.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coref/lexicon.hpp"
#include "coref/treebank.hpp"

namespace coref {

using MentionId = int;

enum class MentionKind { Pronoun, Nominal, Proper };

std::string_view to_string(MentionKind k);

struct TypeProfile {
  Gender gender = Gender::Unknown;
  Personhood personhood = Personhood::Unknown;
  Number number = Number::Unknown;

  friend bool operator==(const TypeProfile&, const TypeProfile&) = default;
};

struct Mention {
  MentionId id = 0;
  NodeId node;
  int sentence_index = 0;
  Span span;
  NodeId head_leaf;
  std::string head_word;
  std::string head_tag;
  MentionKind kind = MentionKind::Nominal;
  TypeProfile profile;
};

struct TokenAnnotation {
  int sentence = 0;
  int token = 0;
  std::optional<std::string> supersense;  // "noun.person", "noun.location", ...
  std::optional<std::string> ner;         // "PERSON", "LOCATION", ...
};

// Annotations keyed by (sentence, token).
class AnnotationIndex {
 public:
  AnnotationIndex() = default;
  explicit AnnotationIndex(std::span<const TokenAnnotation> annotations);

  const TokenAnnotation* find(int sentence, int token) const;

 private:
  std::map<std::pair<int, int>, TokenAnnotation> by_position_;
};

// One gold mention span, half-open over token indices of one sentence.
struct GoldSpan {
  int sentence = 0;
  int start = 0;
  int end = 0;

  friend bool operator==(const GoldSpan&, const GoldSpan&) = default;
  friend auto operator<=>(const GoldSpan&, const GoldSpan&) = default;
};

// All NPs that are the largest for their head token, plus PRP$ leaves that
// head no NP, ordered by (sentence, span start, span end descending).
// Ids are positions in that order. Kind and profile are left at defaults.
std::vector<Mention> extract_mentions(const DocumentTree& doc);

// Maps each gold span onto the smallest covering NP, taking the highest of
// several NPs with that same span. A pronoun leaf wins when no NP matches
// the span exactly. The mention keeps the gold span. Ids follow
// the input order, which is expected to be document order.
std::vector<Mention> map_gold_mentions(const DocumentTree& doc, std::span<const GoldSpan> spans);

MentionKind classify_kind(std::string_view head_tag);
Number infer_number(const Mention& m, const Lexicon& lex);
Gender infer_gender(const Mention& m, const DocumentTree& doc, const Lexicon& lex,
                    bool use_word_lists = true);
Personhood infer_personhood(const Mention& m, const DocumentTree& doc,
                            const AnnotationIndex& annotations, const Lexicon& lex,
                            bool use_word_lists = true);

// Fills kind and profile for every mention. Gender is inferred before
// personhood, which depends on it.
void type_mentions(std::vector<Mention>& mentions, const DocumentTree& doc,
                   const AnnotationIndex& annotations, const Lexicon& lex,
                   bool use_word_lists = true);

// Grammatical person of a mention: the table value for known pronouns,
// Third otherwise.
GrammaticalPerson grammatical_person(const Mention& m, const Lexicon& lex);

// Surface tokens covered by the mention's span.
std::vector<std::string_view> mention_tokens(const Mention& m, const DocumentTree& doc);

}  // namespace coref
