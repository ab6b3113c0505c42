#pragma once

// Penn Treebank constituency trees: reading, printing, Collins head finding,
// and the right-branching document tree used for cross-sentence path
// distances.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coref {

// Half-open token interval within one sentence.
struct Span {
  int begin = 0;
  int end = 0;

  int size() const { return end - begin; }
  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

// A freshly read sentence tree. Leaves carry a token and the POS tag as
// their label; interior nodes carry a category and no token.
struct ParseNode {
  std::string label;
  std::string token;
  std::vector<ParseNode> children;
  Span span;

  bool is_leaf() const { return children.empty(); }
};

// Reads a sequence of bracketed parses, one tree per top-level expression.
// Throws ParseError naming the byte offset on malformed input.
std::vector<ParseNode> read_ptb(std::string_view text);

// Canonical single-space form: "(S (NP (NN dog)))".
std::string to_ptb(const ParseNode& tree);

// Collapses whitespace runs so that to_ptb(read_ptb(t)) == normalize_ptb(t)
// for well-formed t.
std::string normalize_ptb(std::string_view text);

// "NP-SBJ-1" -> "NP", "NP=2" -> "NP". Labels that start with '-' (-NONE-,
// -LRB-) are returned unchanged.
std::string_view base_category(std::string_view label);

bool is_np_label(std::string_view label);

// Index of the head child under the Collins head-percolation table.
// child_labels holds the categories (or POS tags) of the children in order.
// Categories outside the table take the rightmost child.
std::size_t collins_head_child(std::string_view label,
                               std::span<const std::string_view> child_labels);

// Identifies a node inside one DocumentTree. doc is a process-unique serial
// of the owning document, so ids from different documents never compare
// equal.
struct NodeId {
  std::uint32_t doc = 0;
  std::uint32_t index = 0;

  friend bool operator==(const NodeId&, const NodeId&) = default;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

inline constexpr std::string_view kLinkLabel = "DOCLINK";

struct SyntaxNode {
  NodeId id;
  std::string label;
  std::string token;
  std::vector<NodeId> children;
  std::optional<NodeId> parent;
  // For link nodes: the index of the sentence on their left.
  int sentence_index = 0;
  Span span;
  int depth = 0;
  bool is_link = false;

  bool is_leaf() const { return children.empty(); }
};

// All sentences of a document joined under a right-branching spine of
// DOCLINK nodes: link(S1, link(S2, ... link(Sk-1, Sk))). Immutable once
// built; every query is const.
class DocumentTree {
 public:
  DocumentTree();

  // k = 0 gives an empty document, k = 1 a document rooted at the sentence.
  static DocumentTree link(std::vector<ParseNode> sentences);

  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  std::uint32_t serial() const { return serial_; }

  std::optional<NodeId> root() const { return root_; }
  std::span<const NodeId> sentence_roots() const { return sentence_roots_; }
  std::span<const NodeId> link_nodes() const { return link_nodes_; }
  std::size_t sentence_count() const { return sentence_roots_.size(); }

  bool contains(NodeId id) const;
  // Throws UsageError if id does not belong to this document.
  const SyntaxNode& node(NodeId id) const;
  const SyntaxNode& operator[](NodeId id) const { return node(id); }

  // Every node id, in pre-order (document order of first visit).
  std::vector<NodeId> preorder() const;
  // Leaf nodes of sentence s in token order.
  std::span<const NodeId> sentence_leaves(int s) const;
  // Leftmost leaf under n.
  NodeId first_leaf(NodeId n) const;

  std::size_t head_child_index(NodeId n) const;
  NodeId head_leaf(NodeId n) const;

  // Reflexive: dominates(a, a) is true.
  bool dominates(NodeId a, NodeId b) const;

  // Number of edges on the tree path from a to b; link edges count 1.
  int path_distance(NodeId a, NodeId b) const;

  // Index of n among its parent's children; 0 for the root.
  std::size_t child_position(NodeId n) const;

 private:
  NodeId make_id(std::size_t index) const {
    return NodeId{serial_, static_cast<std::uint32_t>(index)};
  }
  void check(NodeId id) const;
  NodeId add_sentence(ParseNode&& tree, int sentence_index);

  std::uint32_t serial_;
  std::vector<SyntaxNode> nodes_;
  std::vector<NodeId> head_leaf_;
  std::vector<std::uint32_t> head_child_;
  std::vector<NodeId> sentence_roots_;
  std::vector<NodeId> link_nodes_;
  std::vector<std::vector<NodeId>> sentence_leaves_;
  std::optional<NodeId> root_;
};

}  // namespace coref
