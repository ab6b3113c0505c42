#include "coref/resolve.hpp"

#include <algorithm>
#include <limits>

#include "coref/errors.hpp"

namespace coref {

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::Appositive: return "Appositive";
    case Rule::RoleAppositive: return "RoleAppositive";
    case Rule::PredNom: return "PredNom";
    case Rule::PronounResolve: return "PronounResolve";
    case Rule::NominalResolve: return "NominalResolve";
    case Rule::NullResolve: return "NullResolve";
  }
  return "NullResolve";
}

std::optional<Rule> rule_from_string(std::string_view s) {
  for (Rule r : kAllRules)
    if (to_string(r) == s) return r;
  return std::nullopt;
}

ResolutionContext::ResolutionContext(const DocumentTree& tree, std::span<const Mention> mentions,
                                     const Lexicon& lex)
    : tree_(tree), mentions_(mentions), lex_(lex) {
  for (const auto& m : mentions_) {
    if (m.id < 0 || static_cast<std::size_t>(m.id) >= mentions_.size() ||
        &mentions_[m.id] != &m) {
      throw UsageError("mention ids must equal their positions");
    }
    // With gold mentions two spans may share a head; the first one wins.
    by_head_leaf_.try_emplace(m.head_leaf.index, m.id);
  }
}

const Mention& ResolutionContext::mention(MentionId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= mentions_.size()) {
    throw UsageError("unknown mention id " + std::to_string(id));
  }
  return mentions_[id];
}

const Mention* ResolutionContext::mention_headed_by(NodeId n) const {
  auto it = by_head_leaf_.find(tree_.head_leaf(n).index);
  return it == by_head_leaf_.end() ? nullptr : &mentions_[it->second];
}

namespace {

bool is_clause(std::string_view label) {
  auto c = base_category(label);
  return c == "S" || c == "SINV" || c == "SQ";
}

bool is_vp(std::string_view label) { return base_category(label) == "VP"; }

bool has_coordination(const DocumentTree& doc, const SyntaxNode& parent) {
  return std::any_of(parent.children.begin(), parent.children.end(), [&](NodeId c) {
    auto l = base_category(doc.node(c).label);
    return l == "CC" || l == "CONJP";
  });
}

struct ClauseView {
  NodeId clause;
  NodeId top_vp;  // outermost VP of the verb group, a child of clause
  std::optional<NodeId> subject;
};

// Climbs from a VP through enclosing VPs to the clause that holds them. The
// subject is the last NP child of that clause left of the verb group.
std::optional<ClauseView> enclosing_clause(const DocumentTree& doc, NodeId vp) {
  NodeId top = vp;
  while (auto p = doc.node(top).parent) {
    if (!is_vp(doc.node(*p).label)) break;
    top = *p;
  }
  auto parent = doc.node(top).parent;
  if (!parent || !is_clause(doc.node(*parent).label)) return std::nullopt;
  ClauseView view{*parent, top, std::nullopt};
  const auto& children = doc.node(*parent).children;
  for (NodeId c : children) {
    if (c == top) break;
    if (is_np_label(doc.node(c).label)) view.subject = c;
  }
  return view;
}

// Is some VP on the chain from vp up to top (inclusive) carrying a modal?
bool verb_group_has_modal(const DocumentTree& doc, NodeId vp, NodeId top) {
  for (NodeId n = vp;; n = *doc.node(n).parent) {
    for (NodeId c : doc.node(n).children) {
      if (base_category(doc.node(c).label) == "MD") return true;
    }
    if (n == top) return false;
  }
}

bool precedes(const Mention& a, const Mention& b) { return a.id < b.id; }

}  // namespace

const Mention* detect_appositive(const Mention& m, const ResolutionContext& ctx) {
  const auto& doc = ctx.tree();
  const auto parent = doc.node(m.node).parent;
  if (!parent) return nullptr;
  const auto& p = doc.node(*parent);
  if (!is_np_label(p.label) || has_coordination(doc, p)) return nullptr;
  const std::size_t i = doc.child_position(m.node);
  if (i < 2) return nullptr;
  if (doc.node(p.children[i - 1]).label != ",") return nullptr;
  const NodeId left = p.children[i - 2];
  if (!is_np_label(doc.node(left).label)) return nullptr;
  const Mention* ant = ctx.mention_headed_by(left);
  if (!ant || !precedes(*ant, m)) return nullptr;
  return ant;
}

const Mention* detect_role_appositive(const Mention& m, const ResolutionContext& ctx,
                                      const ResolveConfig& cfg) {
  if (!cfg.enable_role_appositive) return nullptr;
  if (m.kind != MentionKind::Proper || m.profile.personhood != Personhood::Person) return nullptr;
  const auto& doc = ctx.tree();
  const auto parent = doc.node(m.node).parent;
  if (!parent || !is_np_label(doc.node(*parent).label)) return nullptr;
  const std::size_t i = doc.child_position(m.node);
  if (i < 1) return nullptr;
  const NodeId left = doc.node(*parent).children[i - 1];
  if (!is_np_label(doc.node(left).label)) return nullptr;
  const Mention* ant = ctx.mention_headed_by(left);
  if (!ant || !precedes(*ant, m)) return nullptr;
  if (ant->kind != MentionKind::Nominal || ant->profile.personhood == Personhood::NotPerson) {
    return nullptr;
  }
  return ant;
}

const Mention* detect_pred_nom(const Mention& m, const ResolutionContext& ctx,
                               const ResolveConfig& cfg) {
  const auto& doc = ctx.tree();
  const auto parent = doc.node(m.node).parent;
  if (!parent || !is_vp(doc.node(*parent).label)) return nullptr;
  if (!is_np_label(doc.node(m.node).label)) return nullptr;

  // The verb of this VP: its first verbal preterminal, which must precede m.
  std::optional<NodeId> verb;
  for (NodeId c : doc.node(*parent).children) {
    if (c == m.node) break;
    const auto& child = doc.node(c);
    if (child.is_leaf() && (child.label.starts_with("VB") || child.label.starts_with("AUX"))) {
      verb = c;
      break;
    }
  }
  if (!verb || !ctx.lexicon().is_copula(doc.node(*verb).token)) return nullptr;

  const auto clause = enclosing_clause(doc, *parent);
  if (!clause || !clause->subject) return nullptr;
  if (cfg.pred_nom_exclude_modals && verb_group_has_modal(doc, *parent, clause->top_vp)) {
    return nullptr;
  }
  const Mention* subject = ctx.mention_headed_by(*clause->subject);
  if (!subject || !precedes(*subject, m)) return nullptr;
  return subject;
}

bool i_within_i_violation(const Mention& pron, const Mention& cand, const DocumentTree& doc) {
  return doc.dominates(cand.node, pron.node);
}

bool reflexive_violation(const Mention& pron, const Mention& cand, const ResolutionContext& ctx) {
  const auto* entry = ctx.lexicon().pronoun(pron.head_word);
  if (entry && entry->reflexive) return false;
  const auto& doc = ctx.tree();
  if (pron.sentence_index != cand.sentence_index) return false;
  const auto parent = doc.node(pron.node).parent;
  if (!parent || !is_vp(doc.node(*parent).label)) return false;
  const auto clause = enclosing_clause(doc, *parent);
  if (!clause || !clause->subject) return false;
  return doc.head_leaf(*clause->subject) == cand.head_leaf;
}

bool adjunct_violation(const Mention& pron, const Mention& cand, const ResolutionContext& ctx) {
  const auto& doc = ctx.tree();
  if (pron.sentence_index != cand.sentence_index) return false;

  // The pronoun must be the subject of its clause: an NP child of S with a
  // VP to its right.
  const auto parent = doc.node(pron.node).parent;
  if (!parent || !is_clause(doc.node(*parent).label)) return false;
  const auto& siblings = doc.node(*parent).children;
  const std::size_t pos = doc.child_position(pron.node);
  const bool has_predicate = std::any_of(siblings.begin() + pos + 1, siblings.end(),
                                         [&](NodeId c) { return is_vp(doc.node(c).label); });
  if (!has_predicate) return false;

  // Sentence-initial, non-finite (to-infinitive or gerund) S/VP adjunct
  // containing the candidate.
  for (auto a = doc.node(cand.node).parent; a; a = doc.node(*a).parent) {
    const auto& node = doc.node(*a);
    if (node.is_link) break;
    const auto cat = base_category(node.label);
    if (cat != "S" && cat != "VP") continue;
    if (node.span.begin != 0 || doc.dominates(*a, pron.node)) continue;
    const auto up = node.parent;
    if (!up || !is_clause(doc.node(*up).label)) continue;
    const auto& lead = doc.node(doc.first_leaf(*a)).label;
    if (lead == "TO" || lead == "VBG") return true;
  }
  return false;
}

bool type_compatible(const TypeProfile& p, const TypeProfile& c, const ResolveConfig& cfg) {
  if (cfg.check_gender) {
    if ((p.gender == Gender::Male && c.gender == Gender::Female) ||
        (p.gender == Gender::Female && c.gender == Gender::Male)) {
      return false;
    }
    if (cfg.strict_typecheck && p.gender != Gender::Unknown && c.gender == Gender::Unknown) {
      return false;
    }
  }
  if (cfg.check_personhood) {
    if ((p.personhood == Personhood::Person && c.personhood == Personhood::NotPerson) ||
        (p.personhood == Personhood::NotPerson && c.personhood == Personhood::Person)) {
      return false;
    }
    if (cfg.strict_typecheck && p.personhood != Personhood::Unknown &&
        c.personhood == Personhood::Unknown) {
      return false;
    }
  }
  if (cfg.check_number) {
    if ((p.number == Number::Singular && c.number == Number::Plural) ||
        (p.number == Number::Plural && c.number == Number::Singular)) {
      return false;
    }
    if (cfg.strict_typecheck && p.number != Number::Unknown && c.number == Number::Unknown) {
      return false;
    }
  }
  return true;
}

std::vector<MentionId> candidate_pool(const Mention& m, std::span<const Mention> mentions) {
  std::vector<MentionId> pool;
  for (const auto& c : mentions) {
    if (c.id < m.id) pool.push_back(c.id);
  }
  return pool;
}

std::vector<MentionId> filter_pronoun(const Mention& m, std::span<const MentionId> pool,
                                      const ResolutionContext& ctx, const ResolveConfig& cfg) {
  std::vector<MentionId> kept;
  const auto& lex = ctx.lexicon();
  const auto person = grammatical_person(m, lex);
  for (MentionId id : pool) {
    const Mention& c = ctx.mention(id);
    if (i_within_i_violation(m, c, ctx.tree())) continue;
    if (reflexive_violation(m, c, ctx)) continue;
    if (adjunct_violation(m, c, ctx)) continue;
    if (!type_compatible(m.profile, c.profile, cfg)) continue;
    if (!cfg.allow_pro_pro_match && c.kind == MentionKind::Pronoun) continue;
    if (cfg.check_grammatical_person && grammatical_person(c, lex) != person) continue;
    kept.push_back(id);
  }
  return kept;
}

namespace {

bool substring_match(const Mention& a, const Mention& b) {
  if (a.head_tag != "NNP" || b.head_tag != "NNP") return false;
  if (a.head_word.size() < 4 || b.head_word.size() < 4) return false;
  return fold_case(a.head_word.substr(0, 4)) == fold_case(b.head_word.substr(0, 4));
}

bool head_match(const Mention& a, const Mention& b) {
  // Possessor NPs are headed by their "'s" token; that is not a name.
  if (a.head_tag == "POS" || b.head_tag == "POS") return false;
  return fold_case(a.head_word) == fold_case(b.head_word);
}

}  // namespace

std::vector<MentionId> filter_nominal(const Mention& m, std::span<const MentionId> pool,
                                      const ResolutionContext& ctx, const ResolveConfig&) {
  std::vector<MentionId> kept;
  for (MentionId id : pool) {
    const Mention& c = ctx.mention(id);
    if (c.kind == MentionKind::Pronoun) continue;
    if (head_match(m, c) || substring_match(m, c)) kept.push_back(id);
  }
  return kept;
}

std::optional<MentionId> select_antecedent(const Mention& m, std::span<const MentionId> candidates,
                                           const ResolutionContext& ctx) {
  std::optional<MentionId> best;
  int best_distance = std::numeric_limits<int>::max();
  for (MentionId id : candidates) {
    const int d = ctx.tree().path_distance(m.node, ctx.mention(id).node);
    if (d < best_distance || (d == best_distance && best && id > *best)) {
      best = id;
      best_distance = d;
    }
  }
  return best;
}

std::vector<Decision> resolve_document(const ResolutionContext& ctx, const ResolveConfig& cfg) {
  std::vector<Decision> decisions;
  decisions.reserve(ctx.mentions().size());
  const auto& lex = ctx.lexicon();
  for (const Mention& m : ctx.mentions()) {
    Decision d;
    d.mention = m.id;
    if (m.kind == MentionKind::Pronoun &&
        (!cfg.resolve_pronouns || (!cfg.resolve_second_person &&
                                   grammatical_person(m, lex) == GrammaticalPerson::Second))) {
      decisions.push_back(std::move(d));
      continue;
    }
    if (const Mention* a = detect_appositive(m, ctx)) {
      d.antecedent = a->id;
      d.rule = Rule::Appositive;
    } else if (const Mention* r = detect_role_appositive(m, ctx, cfg)) {
      d.antecedent = r->id;
      d.rule = Rule::RoleAppositive;
    } else if (const Mention* p = detect_pred_nom(m, ctx, cfg)) {
      d.antecedent = p->id;
      d.rule = Rule::PredNom;
    } else {
      const auto pool = candidate_pool(m, ctx.mentions());
      const bool pronoun = m.kind == MentionKind::Pronoun;
      d.candidates = pronoun ? filter_pronoun(m, pool, ctx, cfg) : filter_nominal(m, pool, ctx, cfg);
      d.antecedent = select_antecedent(m, d.candidates, ctx);
      if (d.antecedent) d.rule = pronoun ? Rule::PronounResolve : Rule::NominalResolve;
    }
    decisions.push_back(std::move(d));
  }
  return decisions;
}

}  // namespace coref
