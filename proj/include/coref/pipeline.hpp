#pragma once

// Document ingestion and the end-to-end pipeline:
// parses -> linked tree -> mentions -> typing -> decisions -> clusters.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coref/cluster.hpp"
#include "coref/lexicon.hpp"
#include "coref/mention.hpp"
#include "coref/resolve.hpp"
#include "coref/treebank.hpp"

namespace coref {

// One document as read from JSON:
//   {"id": ..., "sentences": [ptb, ...],
//    "annotations": [{"s": 0, "t": 3, "supersense": "noun.person", "ner": "PERSON"}],
//    "gold_mentions": [{"s": 0, "start": 0, "end": 2}],
//    "gold_clusters": [[0, 2], [1]]}
struct DocumentInput {
  std::string id;
  std::vector<std::string> sentences;
  std::vector<TokenAnnotation> annotations;
  std::optional<std::vector<GoldSpan>> gold_mentions;
  // Indices into gold_mentions. Gold mentions missing from every cluster are
  // singletons.
  std::optional<std::vector<std::vector<int>>> gold_clusters;
};

// Throws InputError on structural problems.
DocumentInput document_from_json(const nlohmann::json& j);
nlohmann::json document_to_json(const DocumentInput& doc);

// A stream holds one JSON object, a JSON array of objects, or one object per
// line. source names the stream in error messages.
std::vector<DocumentInput> read_documents(std::istream& in, const std::string& source);
// Files are read in the given order; directories contribute their *.json and
// *.jsonl files in name order. "-" reads standard input.
std::vector<DocumentInput> read_document_paths(const std::vector<std::string>& paths);

enum class MentionSource {
  Auto,   // gold spans when the document has them, parse-derived otherwise
  Parse,  // always extract from the parse
  Gold,   // require gold spans
};

struct PipelineResult {
  std::string doc_id;
  DocumentTree tree;
  std::vector<Mention> mentions;
  std::vector<Decision> decisions;
  Clustering clustering;
  bool gold_mentions = false;  // mention i is gold mention i
};

// Throws InputError (prefixed with the document id) for unreadable parses,
// bad annotations or bad gold spans.
PipelineResult run_pipeline(const DocumentInput& input, const ResolveConfig& cfg,
                            const Lexicon& lex, MentionSource source = MentionSource::Auto);

// Gold entities over gold mention indices, universe in document order.
std::optional<Clustering> gold_clustering(const DocumentInput& input);

// The system clustering re-keyed onto gold mention indices (by span when
// mentions came from the parse). System mentions without a gold twin get
// ids past the gold range, so scoring reports them as a universe mismatch.
Clustering align_to_gold(const PipelineResult& result, const DocumentInput& input);

// Gold entity label of each system mention (by id), or nullopt when the
// mention has no gold twin.
std::vector<std::optional<int>> gold_labels_for_mentions(const PipelineResult& result,
                                                         const DocumentInput& input);

// One line per sentence; every mention wrapped as "[ ... ]_k".
std::string render_brackets(const PipelineResult& result);

// "doc_id TAB sentence TAB start TAB end TAB entity_label" per mention.
std::string clusters_tsv(const PipelineResult& result);

// Rows of a clusters TSV, grouped by document id in first-seen order.
struct ClusterRow {
  GoldSpan span;
  int label = 0;
};
std::vector<std::pair<std::string, std::vector<ClusterRow>>> read_clusters_tsv(std::istream& in);

// Builds a clustering over gold mention indices from external cluster rows.
Clustering align_rows_to_gold(const std::vector<ClusterRow>& rows, const DocumentInput& input);

}  // namespace coref
