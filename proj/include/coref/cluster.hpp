#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "coref/mention.hpp"
#include "coref/resolve.hpp"

namespace coref {

// Union-find with union by size and path compression.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  std::size_t find(std::size_t x);
  // Returns false when x and y were already together.
  bool unite(std::size_t x, std::size_t y);
  std::size_t size_of(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// A partition of mention ids into entities. Labels run 1..E in order of each
// entity's earliest member, where "earliest" is position in the universe
// sequence as given.
class Clustering {
 public:
  Clustering() = default;
  // labels[i] is the entity of universe[i]; labels are renumbered by first
  // appearance, so any consistent labelling is accepted.
  Clustering(std::vector<MentionId> universe, std::span<const int> labels);

  std::span<const MentionId> universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }
  int entity_count() const { return entity_count_; }
  bool contains(MentionId id) const { return position_.contains(id); }
  // Throws UsageError for ids outside the universe.
  int label_of(MentionId id) const;
  // Members of each entity, entity e at index e-1, members in universe order.
  std::vector<std::vector<MentionId>> entities() const;
  std::span<const int> labels() const { return labels_; }

  friend bool operator==(const Clustering& a, const Clustering& b) {
    return a.universe_ == b.universe_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<MentionId> universe_;
  std::vector<int> labels_;
  std::map<MentionId, std::size_t> position_;
  int entity_count_ = 0;
};

// Smallest equivalence relation containing every (mention, antecedent)
// link. Throws UsageError when a decision names an id outside universe.
Clustering transitive_closure(std::span<const Decision> decisions,
                              std::span<const MentionId> universe);

Clustering transitive_closure(std::span<const std::pair<MentionId, MentionId>> links,
                              std::span<const MentionId> universe);

}  // namespace coref
