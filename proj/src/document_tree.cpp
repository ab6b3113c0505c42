#include <atomic>
#include <utility>

#include "coref/errors.hpp"
#include "coref/treebank.hpp"

namespace coref {

namespace {

std::uint32_t next_serial() {
  static std::atomic<std::uint32_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

DocumentTree::DocumentTree() : serial_(next_serial()) {}

NodeId DocumentTree::add_sentence(ParseNode&& tree, int sentence_index) {
  const std::size_t index = nodes_.size();
  nodes_.emplace_back();
  {
    SyntaxNode& n = nodes_.back();
    n.id = make_id(index);
    n.label = std::move(tree.label);
    n.token = std::move(tree.token);
    n.sentence_index = sentence_index;
    n.span = tree.span;
  }
  std::vector<NodeId> children;
  children.reserve(tree.children.size());
  for (auto& child : tree.children) {
    NodeId c = add_sentence(std::move(child), sentence_index);
    nodes_[c.index].parent = make_id(index);
    children.push_back(c);
  }
  nodes_[index].children = std::move(children);
  return make_id(index);
}

DocumentTree DocumentTree::link(std::vector<ParseNode> sentences) {
  DocumentTree doc;
  const int k = static_cast<int>(sentences.size());
  for (int s = 0; s < k; ++s) {
    doc.sentence_roots_.push_back(doc.add_sentence(std::move(sentences[s]), s));
  }
  if (k == 0) return doc;

  // Build the spine from the right: link(Sk-1, Sk), then link(Sk-2, that), ...
  NodeId right = doc.sentence_roots_.back();
  std::vector<NodeId> links;
  for (int s = k - 2; s >= 0; --s) {
    const std::size_t index = doc.nodes_.size();
    SyntaxNode link;
    link.id = doc.make_id(index);
    link.label = std::string(kLinkLabel);
    link.sentence_index = s;
    link.is_link = true;
    link.children = {doc.sentence_roots_[s], right};
    doc.nodes_.push_back(std::move(link));
    doc.nodes_[doc.sentence_roots_[s].index].parent = doc.make_id(index);
    doc.nodes_[right.index].parent = doc.make_id(index);
    right = doc.make_id(index);
    links.push_back(right);
  }
  doc.link_nodes_.assign(links.rbegin(), links.rend());
  doc.root_ = right;

  // Depths, top-down from the root.
  std::vector<NodeId> stack{*doc.root_};
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    auto& node = doc.nodes_[n.index];
    for (NodeId c : node.children) {
      doc.nodes_[c.index].depth = node.depth + 1;
      stack.push_back(c);
    }
  }

  doc.sentence_leaves_.resize(k);
  for (NodeId n : doc.preorder()) {
    const auto& node = doc.nodes_[n.index];
    if (node.is_leaf() && !node.is_link) doc.sentence_leaves_[node.sentence_index].push_back(n);
  }

  // Head children and head leaves. Children always have larger indices than
  // their parent for sentence nodes, so a reverse sweep sees children first;
  // link nodes were appended after all sentence nodes, right to left.
  doc.head_child_.assign(doc.nodes_.size(), 0);
  doc.head_leaf_.assign(doc.nodes_.size(), NodeId{});
  auto compute = [&doc](std::size_t i) {
    const auto& node = doc.nodes_[i];
    if (node.is_leaf()) {
      doc.head_leaf_[i] = node.id;
      return;
    }
    std::vector<std::string_view> labels;
    labels.reserve(node.children.size());
    for (NodeId c : node.children) labels.emplace_back(doc.nodes_[c.index].label);
    auto h = collins_head_child(node.label, labels);
    doc.head_child_[i] = static_cast<std::uint32_t>(h);
    doc.head_leaf_[i] = doc.head_leaf_[node.children[h].index];
  };
  const std::size_t sentence_nodes = doc.nodes_.size() - doc.link_nodes_.size();
  for (std::size_t i = sentence_nodes; i-- > 0;) compute(i);
  for (std::size_t i = sentence_nodes; i < doc.nodes_.size(); ++i) compute(i);
  return doc;
}

bool DocumentTree::contains(NodeId id) const {
  return id.doc == serial_ && id.index < nodes_.size();
}

void DocumentTree::check(NodeId id) const {
  if (id.doc != serial_) throw UsageError("node belongs to a different document");
  if (id.index >= nodes_.size()) throw UsageError("node id out of range");
}

const SyntaxNode& DocumentTree::node(NodeId id) const {
  check(id);
  return nodes_[id.index];
}

std::vector<NodeId> DocumentTree::preorder() const {
  std::vector<NodeId> out;
  if (!root_) return out;
  out.reserve(nodes_.size());
  std::vector<NodeId> stack{*root_};
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    out.push_back(n);
    const auto& children = nodes_[n.index].children;
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::span<const NodeId> DocumentTree::sentence_leaves(int s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= sentence_leaves_.size()) {
    throw UsageError("sentence index out of range");
  }
  return sentence_leaves_[s];
}

NodeId DocumentTree::first_leaf(NodeId n) const {
  check(n);
  while (!nodes_[n.index].is_leaf()) n = nodes_[n.index].children.front();
  return n;
}

std::size_t DocumentTree::head_child_index(NodeId n) const {
  check(n);
  return head_child_[n.index];
}

NodeId DocumentTree::head_leaf(NodeId n) const {
  check(n);
  return head_leaf_[n.index];
}

bool DocumentTree::dominates(NodeId a, NodeId b) const {
  check(a);
  check(b);
  const int target = nodes_[a.index].depth;
  while (nodes_[b.index].depth > target) b = *nodes_[b.index].parent;
  return a == b;
}

int DocumentTree::path_distance(NodeId a, NodeId b) const {
  check(a);
  check(b);
  int distance = 0;
  while (nodes_[a.index].depth > nodes_[b.index].depth) {
    a = *nodes_[a.index].parent;
    ++distance;
  }
  while (nodes_[b.index].depth > nodes_[a.index].depth) {
    b = *nodes_[b.index].parent;
    ++distance;
  }
  while (a != b) {
    a = *nodes_[a.index].parent;
    b = *nodes_[b.index].parent;
    distance += 2;
  }
  return distance;
}

std::size_t DocumentTree::child_position(NodeId n) const {
  const auto& node = this->node(n);
  if (!node.parent) return 0;
  const auto& siblings = nodes_[node.parent->index].children;
  for (std::size_t i = 0; i < siblings.size(); ++i)
    if (siblings[i] == n) return i;
  return 0;
}

}  // namespace coref
