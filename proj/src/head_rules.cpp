#include <algorithm>
#include <array>
#include <initializer_list>
#include <unordered_map>

#include "coref/treebank.hpp"

namespace coref {

namespace {

enum class Scan {
  Left,      // for each category in priority order, search children left to right
  Right,     // for each category in priority order, search right to left
  LeftDis,   // first child from the left matching any category
  RightDis,  // first child from the right matching any category
};

struct HeadRule {
  Scan scan;
  std::vector<std::string_view> categories;
};

using RuleList = std::vector<HeadRule>;

// Collins (1999), Appendix A, as distributed with the Penn Treebank tools.
const std::unordered_map<std::string_view, RuleList>& head_table() {
  static const std::unordered_map<std::string_view, RuleList> table = {
      {"ADJP", {{Scan::Left, {"NNS", "QP", "NN", "$", "ADVP", "JJ", "VBN", "VBG", "ADJP",
                              "JJR", "NP", "JJS", "DT", "FW", "RBR", "RBS", "SBAR", "RB"}}}},
      {"ADVP", {{Scan::Right, {"RB", "RBR", "RBS", "FW", "ADVP", "TO", "CD", "JJR", "JJ",
                               "IN", "NP", "JJS", "NN"}}}},
      {"CONJP", {{Scan::Right, {"CC", "RB", "IN"}}}},
      {"FRAG", {{Scan::Right, {}}}},
      {"INTJ", {{Scan::Left, {}}}},
      {"LST", {{Scan::Right, {"LS", ":"}}}},
      {"NAC", {{Scan::Left, {"NN", "NNS", "NNP", "NNPS", "NP", "NAC", "EX", "$", "CD", "QP",
                             "PRP", "VBG", "JJ", "JJS", "JJR", "ADJP", "FW"}}}},
      {"PP", {{Scan::Right, {"IN", "TO", "VBG", "VBN", "RP", "FW"}}}},
      {"PRN", {{Scan::Left, {}}}},
      {"PRT", {{Scan::Right, {"RP"}}}},
      {"QP", {{Scan::Left, {"$", "IN", "NNS", "NN", "JJ", "RB", "DT", "CD", "NCD", "QP",
                            "JJR", "JJS"}}}},
      {"RRC", {{Scan::Right, {"VP", "NP", "ADVP", "ADJP", "PP"}}}},
      {"S", {{Scan::Left, {"TO", "IN", "VP", "S", "SBAR", "ADJP", "UCP", "NP"}}}},
      {"SBAR", {{Scan::Left, {"WHNP", "WHPP", "WHADVP", "WHADJP", "IN", "DT", "S", "SQ",
                              "SINV", "SBAR", "FRAG"}}}},
      {"SBARQ", {{Scan::Left, {"SQ", "S", "SINV", "SBARQ", "FRAG"}}}},
      {"SINV", {{Scan::Left, {"VBZ", "VBD", "VBP", "VB", "MD", "VP", "S", "SINV", "ADJP",
                              "NP"}}}},
      {"SQ", {{Scan::Left, {"VBZ", "VBD", "VBP", "VB", "MD", "VP", "SQ"}}}},
      {"UCP", {{Scan::Right, {}}}},
      {"VP", {{Scan::Left, {"TO", "VBD", "VBN", "MD", "VBZ", "VB", "VBG", "VBP", "AUX",
                            "VP", "ADJP", "NN", "NNS", "NP"}}}},
      {"WHADJP", {{Scan::Left, {"CC", "WRB", "JJ", "ADJP"}}}},
      {"WHADVP", {{Scan::Right, {"CC", "WRB"}}}},
      {"WHNP", {{Scan::Left, {"WDT", "WP", "WP$", "WHADJP", "WHPP", "WHNP"}}}},
      {"WHPP", {{Scan::Right, {"IN", "TO", "FW"}}}},
      {"X", {{Scan::Right, {}}}},
      // The POS special case is handled before these rules.
      {"NP", {{Scan::RightDis, {"NN", "NNP", "NNPS", "NNS", "NX", "POS", "JJR"}},
              {Scan::Left, {"NP"}},
              {Scan::RightDis, {"$", "ADJP", "PRN"}},
              {Scan::Right, {"CD"}},
              {Scan::RightDis, {"JJ", "JJS", "RB", "QP"}}}},
  };
  return table;
}

bool in(std::string_view label, const std::vector<std::string_view>& set) {
  return std::find(set.begin(), set.end(), label) != set.end();
}

std::optional<std::size_t> apply_rule(const HeadRule& rule,
                                 std::span<const std::string_view> children) {
  const std::size_t n = children.size();
  switch (rule.scan) {
    case Scan::Left:
      for (auto cat : rule.categories)
        for (std::size_t i = 0; i < n; ++i)
          if (children[i] == cat) return i;
      break;
    case Scan::Right:
      for (auto cat : rule.categories)
        for (std::size_t i = n; i-- > 0;)
          if (children[i] == cat) return i;
      break;
    case Scan::LeftDis:
      for (std::size_t i = 0; i < n; ++i)
        if (in(children[i], rule.categories)) return i;
      break;
    case Scan::RightDis:
      for (std::size_t i = n; i-- > 0;)
        if (in(children[i], rule.categories)) return i;
      break;
  }
  return std::nullopt;
}

std::string_view head_category(std::string_view label) {
  auto base = base_category(label);
  if (base == "NML" || base == "NX") return "NP";
  return base;
}

}  // namespace

std::string_view base_category(std::string_view label) {
  if (label.empty() || label.front() == '-') return label;
  auto cut = label.find_first_of("-=");
  return cut == std::string_view::npos ? label : label.substr(0, cut);
}

bool is_np_label(std::string_view label) { return base_category(label) == "NP"; }

std::size_t collins_head_child(std::string_view label,
                               std::span<const std::string_view> child_labels) {
  const std::size_t n = child_labels.size();
  if (n <= 1) return 0;

  std::vector<std::string_view> children;
  children.reserve(n);
  for (auto c : child_labels) children.push_back(head_category(c));

  const auto category = head_category(label);
  const auto& table = head_table();
  auto it = table.find(category);
  if (it == table.end()) return n - 1;

  std::optional<std::size_t> head;
  if (category == "NP" && children.back() == "POS") {
    head = n - 1;
  } else {
    for (const auto& rule : it->second) {
      head = apply_rule(rule, children);
      if (head) break;
    }
  }
  if (!head) {
    const auto first = it->second.front().scan;
    head = (first == Scan::Left || first == Scan::LeftDis) ? 0 : n - 1;
    if (category == "NP") head = n - 1;
  }

  // Coordination: a head preceded by CC moves to the conjunct left of it.
  if (*head >= 2 && (children[*head - 1] == "CC" || children[*head - 1] == "CONJP")) {
    *head -= 2;
  }
  return *head;
}

}  // namespace coref
