#pragma once

// Antecedent selection. Each mention, in document order, is tried against
// the immediate patterns (appositive, role appositive, predicate
// nominative); otherwise previous mentions are filtered by kind-specific
// rules and the survivor closest in the linked document tree wins.

#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coref/lexicon.hpp"
#include "coref/mention.hpp"
#include "coref/treebank.hpp"

namespace coref {

enum class Rule { Appositive, RoleAppositive, PredNom, PronounResolve, NominalResolve, NullResolve };

inline constexpr Rule kAllRules[] = {Rule::Appositive,     Rule::RoleAppositive,
                                     Rule::PredNom,        Rule::PronounResolve,
                                     Rule::NominalResolve, Rule::NullResolve};

std::string_view to_string(Rule r);
std::optional<Rule> rule_from_string(std::string_view s);

struct Decision {
  MentionId mention = 0;
  std::optional<MentionId> antecedent;
  Rule rule = Rule::NullResolve;
  // The filtered candidate set handed to antecedent selection. Empty when an
  // immediate pattern fired or the mention was never resolved.
  std::vector<MentionId> candidates;
};

// Defaults are the full system: every typecheck on, pro-pro matches and
// second-person resolution allowed, strict typing and grammatical-person
// checks off.
struct ResolveConfig {
  bool use_word_lists = true;
  bool check_gender = true;
  bool check_personhood = true;
  bool check_number = true;
  bool resolve_pronouns = true;
  bool resolve_second_person = true;
  bool allow_pro_pro_match = true;
  bool strict_typecheck = false;
  bool check_grammatical_person = false;
  bool enable_role_appositive = true;
  bool pred_nom_exclude_modals = false;

  friend bool operator==(const ResolveConfig&, const ResolveConfig&) = default;
};

// Read-only view of one typed document.
class ResolutionContext {
 public:
  ResolutionContext(const DocumentTree& tree, std::span<const Mention> mentions,
                    const Lexicon& lex);

  const DocumentTree& tree() const { return tree_; }
  std::span<const Mention> mentions() const { return mentions_; }
  const Mention& mention(MentionId id) const;
  const Lexicon& lexicon() const { return lex_; }

  // The mention whose head token is the head of node n, if any.
  const Mention* mention_headed_by(NodeId n) const;

 private:
  const DocumentTree& tree_;
  std::span<const Mention> mentions_;
  const Lexicon& lex_;
  std::unordered_map<std::uint32_t, MentionId> by_head_leaf_;
};

const Mention* detect_appositive(const Mention& m, const ResolutionContext& ctx);
const Mention* detect_role_appositive(const Mention& m, const ResolutionContext& ctx,
                                      const ResolveConfig& cfg);
const Mention* detect_pred_nom(const Mention& m, const ResolutionContext& ctx,
                               const ResolveConfig& cfg);

bool i_within_i_violation(const Mention& pron, const Mention& cand, const DocumentTree& doc);
bool reflexive_violation(const Mention& pron, const Mention& cand, const ResolutionContext& ctx);
bool adjunct_violation(const Mention& pron, const Mention& cand, const ResolutionContext& ctx);

// p is the pronoun's profile, c the candidate's.
bool type_compatible(const TypeProfile& p, const TypeProfile& c, const ResolveConfig& cfg);

// Every mention strictly before m in document order.
std::vector<MentionId> candidate_pool(const Mention& m, std::span<const Mention> mentions);

std::vector<MentionId> filter_pronoun(const Mention& m, std::span<const MentionId> pool,
                                      const ResolutionContext& ctx, const ResolveConfig& cfg);
std::vector<MentionId> filter_nominal(const Mention& m, std::span<const MentionId> pool,
                                      const ResolutionContext& ctx, const ResolveConfig& cfg);

// Closest candidate by tree path distance; ties go to the later mention.
std::optional<MentionId> select_antecedent(const Mention& m, std::span<const MentionId> candidates,
                                           const ResolutionContext& ctx);

std::vector<Decision> resolve_document(const ResolutionContext& ctx, const ResolveConfig& cfg);

}  // namespace coref
