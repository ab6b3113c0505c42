#pragma once

// Pairwise and B-cubed coreference scores.
//
// Pairwise counts are micro-averaged: tallies are pooled over documents
// before precision and recall are computed. B-cubed is macro-averaged:
// per-document precision and recall are averaged, and F is taken from the
// averages.

#include <cstdint>
#include <span>

#include "coref/cluster.hpp"

namespace coref {

// Unordered mention pairs, each counted once.
struct PairCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  PairCounts& operator+=(const PairCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

struct Score {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct BCubed {
  double precision = 0.0;
  double recall = 0.0;
};

// Harmonic mean, 0 when p + r == 0.
double f_measure(double precision, double recall);

// Throws UsageError listing the ids present in only one clustering.
PairCounts pairwise_counts(const Clustering& sys, const Clustering& gold);

// A side with no pairs scores 1.0 if the other side has none either, else 0.
Score score_from_counts(const PairCounts& counts);
Score pairwise_micro(std::span<const PairCounts> counts);

// Throws UsageError on an empty or mismatched universe.
BCubed b_cubed_doc(const Clustering& sys, const Clustering& gold);
// Throws UsageError on an empty sequence.
Score b_cubed_macro(std::span<const BCubed> doc_scores);

}  // namespace coref
