#include "coref/cluster.hpp"

#include <numeric>

#include "coref/errors.hpp"

namespace coref {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  return true;
}

Clustering::Clustering(std::vector<MentionId> universe, std::span<const int> labels)
    : universe_(std::move(universe)) {
  if (labels.size() != universe_.size()) throw UsageError("one label per mention required");
  std::map<int, int> renumber;
  labels_.reserve(labels.size());
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (!position_.emplace(universe_[i], i).second) {
      throw UsageError("duplicate mention id " + std::to_string(universe_[i]));
    }
    auto [it, fresh] = renumber.emplace(labels[i], static_cast<int>(renumber.size()) + 1);
    labels_.push_back(it->second);
  }
  entity_count_ = static_cast<int>(renumber.size());
}

int Clustering::label_of(MentionId id) const {
  auto it = position_.find(id);
  if (it == position_.end()) throw UsageError("mention id " + std::to_string(id) + " not in clustering");
  return labels_[it->second];
}

std::vector<std::vector<MentionId>> Clustering::entities() const {
  std::vector<std::vector<MentionId>> out(entity_count_);
  for (std::size_t i = 0; i < universe_.size(); ++i) out[labels_[i] - 1].push_back(universe_[i]);
  return out;
}

Clustering transitive_closure(std::span<const std::pair<MentionId, MentionId>> links,
                              std::span<const MentionId> universe) {
  std::map<MentionId, std::size_t> position;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (!position.emplace(universe[i], i).second) {
      throw UsageError("duplicate mention id " + std::to_string(universe[i]));
    }
  }
  auto locate = [&position](MentionId id) {
    auto it = position.find(id);
    if (it == position.end()) throw UsageError("decision references unknown mention " + std::to_string(id));
    return it->second;
  };
  DisjointSets sets(universe.size());
  for (const auto& [a, b] : links) sets.unite(locate(a), locate(b));

  std::vector<int> labels(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) labels[i] = static_cast<int>(sets.find(i));
  return Clustering(std::vector<MentionId>(universe.begin(), universe.end()), labels);
}

Clustering transitive_closure(std::span<const Decision> decisions,
                              std::span<const MentionId> universe) {
  std::vector<std::pair<MentionId, MentionId>> links;
  std::map<MentionId, bool> known;
  for (MentionId id : universe) known[id] = true;
  for (const auto& d : decisions) {
    if (!known.contains(d.mention)) {
      throw UsageError("decision references unknown mention " + std::to_string(d.mention));
    }
    if (d.antecedent) links.emplace_back(d.mention, *d.antecedent);
  }
  return transitive_closure(links, universe);
}

}  // namespace coref
