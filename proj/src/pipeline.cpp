#include "coref/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "coref/errors.hpp"

namespace coref {

using nlohmann::json;

namespace {

[[noreturn]] void bad_input(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

int get_int(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    bad_input(where, std::string("missing integer field '") + key + "'");
  }
  return j[key].get<int>();
}

}  // namespace

DocumentInput document_from_json(const json& j) {
  if (!j.is_object()) throw InputError("document must be a JSON object");
  DocumentInput doc;
  if (j.contains("id")) {
    const auto& id = j["id"];
    doc.id = id.is_string() ? id.get<std::string>() : id.dump();
  }
  const std::string where = "document '" + doc.id + "'";
  if (!j.contains("sentences") || !j["sentences"].is_array()) {
    bad_input(where, "missing 'sentences' array");
  }
  for (const auto& s : j["sentences"]) {
    if (!s.is_string()) bad_input(where, "sentences must be strings");
    doc.sentences.push_back(s.get<std::string>());
  }
  if (j.contains("annotations") && !j["annotations"].is_null()) {
    for (const auto& a : j["annotations"]) {
      TokenAnnotation ann;
      ann.sentence = get_int(a, "s", where);
      ann.token = get_int(a, "t", where);
      if (a.contains("supersense") && a["supersense"].is_string()) {
        ann.supersense = a["supersense"].get<std::string>();
      }
      if (a.contains("ner") && a["ner"].is_string()) ann.ner = a["ner"].get<std::string>();
      doc.annotations.push_back(std::move(ann));
    }
  }
  if (j.contains("gold_mentions") && !j["gold_mentions"].is_null()) {
    std::vector<GoldSpan> spans;
    for (const auto& g : j["gold_mentions"]) {
      spans.push_back(GoldSpan{get_int(g, "s", where), get_int(g, "start", where),
                               get_int(g, "end", where)});
    }
    doc.gold_mentions = std::move(spans);
  }
  if (j.contains("gold_clusters") && !j["gold_clusters"].is_null()) {
    if (!doc.gold_mentions) bad_input(where, "gold_clusters given without gold_mentions");
    std::vector<std::vector<int>> clusters;
    std::vector<bool> seen(doc.gold_mentions->size(), false);
    for (const auto& c : j["gold_clusters"]) {
      std::vector<int> members;
      for (const auto& m : c) {
        if (!m.is_number_integer()) bad_input(where, "gold cluster members must be integers");
        const int i = m.get<int>();
        if (i < 0 || static_cast<std::size_t>(i) >= seen.size()) {
          bad_input(where, "gold cluster member " + std::to_string(i) + " out of range");
        }
        if (seen[i]) bad_input(where, "gold mention " + std::to_string(i) + " in two clusters");
        seen[i] = true;
        members.push_back(i);
      }
      if (!members.empty()) clusters.push_back(std::move(members));
    }
    doc.gold_clusters = std::move(clusters);
  }
  return doc;
}

json document_to_json(const DocumentInput& doc) {
  json j;
  j["id"] = doc.id;
  j["sentences"] = doc.sentences;
  json anns = json::array();
  for (const auto& a : doc.annotations) {
    json x{{"s", a.sentence}, {"t", a.token}};
    if (a.supersense) x["supersense"] = *a.supersense;
    if (a.ner) x["ner"] = *a.ner;
    anns.push_back(std::move(x));
  }
  j["annotations"] = std::move(anns);
  if (doc.gold_mentions) {
    json spans = json::array();
    for (const auto& g : *doc.gold_mentions) {
      spans.push_back({{"s", g.sentence}, {"start", g.start}, {"end", g.end}});
    }
    j["gold_mentions"] = std::move(spans);
  }
  if (doc.gold_clusters) j["gold_clusters"] = *doc.gold_clusters;
  return j;
}

std::vector<DocumentInput> read_documents(std::istream& in, const std::string& source) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<DocumentInput> docs;
  auto add = [&docs, &source](const json& j) {
    try {
      docs.push_back(document_from_json(j));
    } catch (const InputError& e) {
      throw InputError(source + ": " + e.what());
    }
  };
  try {
    json whole = json::parse(text);
    if (whole.is_array()) {
      for (const auto& j : whole) add(j);
    } else {
      add(whole);
    }
    return docs;
  } catch (const json::parse_error&) {
    // Fall through to one object per line.
  }
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InputError(source + " line " + std::to_string(number) + ": " + e.what());
    }
    add(j);
  }
  return docs;
}

std::vector<DocumentInput> read_document_paths(const std::vector<std::string>& paths) {
  std::vector<DocumentInput> docs;
  auto read_file = [&docs](const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw InputError("cannot open " + p.string());
    auto more = read_documents(in, p.string());
    std::move(more.begin(), more.end(), std::back_inserter(docs));
  };
  for (const auto& path : paths) {
    if (path == "-") {
      auto more = read_documents(std::cin, "<stdin>");
      std::move(more.begin(), more.end(), std::back_inserter(docs));
      continue;
    }
    std::filesystem::path p(path);
    if (std::filesystem::is_directory(p)) {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(p)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".json" || ext == ".jsonl")) {
          files.push_back(entry.path());
        }
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) read_file(f);
    } else {
      read_file(p);
    }
  }
  return docs;
}

PipelineResult run_pipeline(const DocumentInput& input, const ResolveConfig& cfg,
                            const Lexicon& lex, MentionSource source) {
  const std::string where = "document '" + input.id + "'";
  std::vector<ParseNode> trees;
  for (std::size_t s = 0; s < input.sentences.size(); ++s) {
    std::vector<ParseNode> parsed;
    try {
      parsed = read_ptb(input.sentences[s]);
    } catch (const ParseError& e) {
      bad_input(where, "sentence " + std::to_string(s) + ": " + e.what());
    }
    if (parsed.size() != 1) {
      bad_input(where, "sentence " + std::to_string(s) + " holds " +
                           std::to_string(parsed.size()) + " trees, expected 1");
    }
    trees.push_back(std::move(parsed.front()));
  }

  PipelineResult result;
  result.doc_id = input.id;
  result.tree = DocumentTree::link(std::move(trees));
  const auto& tree = result.tree;

  for (const auto& a : input.annotations) {
    if (a.sentence < 0 || static_cast<std::size_t>(a.sentence) >= tree.sentence_count() ||
        a.token < 0 ||
        static_cast<std::size_t>(a.token) >= tree.sentence_leaves(a.sentence).size()) {
      bad_input(where, "annotation (" + std::to_string(a.sentence) + "," +
                           std::to_string(a.token) + ") addresses no token");
    }
  }

  const bool use_gold = source == MentionSource::Gold ||
                        (source == MentionSource::Auto && input.gold_mentions.has_value());
  if (use_gold) {
    if (!input.gold_mentions) bad_input(where, "gold mentions requested but not supplied");
    try {
      result.mentions = map_gold_mentions(tree, *input.gold_mentions);
    } catch (const InputError& e) {
      bad_input(where, e.what());
    }
    result.gold_mentions = true;
  } else {
    result.mentions = extract_mentions(tree);
  }

  const AnnotationIndex annotations(input.annotations);
  type_mentions(result.mentions, tree, annotations, lex, cfg.use_word_lists);

  const ResolutionContext ctx(tree, result.mentions, lex);
  result.decisions = resolve_document(ctx, cfg);

  std::vector<MentionId> universe;
  universe.reserve(result.mentions.size());
  if (result.gold_mentions) {
    // Gold lists need not be in document order; labels follow document order.
    std::vector<const Mention*> ordered;
    for (const auto& m : result.mentions) ordered.push_back(&m);
    std::stable_sort(ordered.begin(), ordered.end(), [](const Mention* a, const Mention* b) {
      return std::tuple(a->sentence_index, a->span.begin, -a->span.end) <
             std::tuple(b->sentence_index, b->span.begin, -b->span.end);
    });
    for (const auto* m : ordered) universe.push_back(m->id);
  } else {
    for (const auto& m : result.mentions) universe.push_back(m.id);
  }
  result.clustering = transitive_closure(result.decisions, universe);
  return result;
}

namespace {

std::vector<int> gold_document_order(const std::vector<GoldSpan>& spans) {
  std::vector<int> order(spans.size());
  for (std::size_t i = 0; i < spans.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&spans](int a, int b) {
    return std::tuple(spans[a].sentence, spans[a].start, -spans[a].end) <
           std::tuple(spans[b].sentence, spans[b].start, -spans[b].end);
  });
  return order;
}

std::map<GoldSpan, int> gold_index_by_span(const std::vector<GoldSpan>& spans) {
  std::map<GoldSpan, int> index;
  for (std::size_t i = 0; i < spans.size(); ++i) index.try_emplace(spans[i], static_cast<int>(i));
  return index;
}

}  // namespace

std::optional<Clustering> gold_clustering(const DocumentInput& input) {
  if (!input.gold_mentions || !input.gold_clusters) return std::nullopt;
  const auto& spans = *input.gold_mentions;
  std::vector<int> entity(spans.size(), -1);
  int next = 0;
  for (const auto& cluster : *input.gold_clusters) {
    for (int m : cluster) entity[m] = next;
    ++next;
  }
  for (auto& e : entity) {
    if (e < 0) e = next++;
  }
  std::vector<MentionId> universe;
  std::vector<int> labels;
  for (int i : gold_document_order(spans)) {
    universe.push_back(i);
    labels.push_back(entity[i]);
  }
  return Clustering(std::move(universe), labels);
}

Clustering align_to_gold(const PipelineResult& result, const DocumentInput& input) {
  std::vector<MentionId> universe;
  std::vector<int> labels;
  if (result.gold_mentions) {
    for (MentionId id : result.clustering.universe()) {
      universe.push_back(id);
      labels.push_back(result.clustering.label_of(id));
    }
    return Clustering(std::move(universe), labels);
  }
  const auto no_spans = std::vector<GoldSpan>{};
  const auto& spans = input.gold_mentions ? *input.gold_mentions : no_spans;
  auto index = gold_index_by_span(spans);
  const int offset = static_cast<int>(spans.size());
  for (MentionId id : result.clustering.universe()) {
    const auto& m = result.mentions[id];
    auto it = index.find(GoldSpan{m.sentence_index, m.span.begin, m.span.end});
    if (it != index.end()) {
      universe.push_back(it->second);
      index.erase(it);
    } else {
      universe.push_back(offset + id);
    }
    labels.push_back(result.clustering.label_of(id));
  }
  return Clustering(std::move(universe), labels);
}

std::vector<std::optional<int>> gold_labels_for_mentions(const PipelineResult& result,
                                                         const DocumentInput& input) {
  std::vector<std::optional<int>> out(result.mentions.size());
  const auto gold = gold_clustering(input);
  if (!gold) return out;
  const auto aligned = align_to_gold(result, input);
  // aligned.universe() is in the same order as result.clustering.universe().
  const auto sys_ids = result.clustering.universe();
  const auto gold_ids = aligned.universe();
  for (std::size_t i = 0; i < sys_ids.size(); ++i) {
    if (gold->contains(gold_ids[i])) out[sys_ids[i]] = gold->label_of(gold_ids[i]);
  }
  return out;
}

std::string render_brackets(const PipelineResult& result) {
  const auto& tree = result.tree;
  std::string out;
  for (std::size_t s = 0; s < tree.sentence_count(); ++s) {
    const auto leaves = tree.sentence_leaves(static_cast<int>(s));
    std::vector<const Mention*> here;
    for (const auto& m : result.mentions) {
      if (m.sentence_index == static_cast<int>(s)) here.push_back(&m);
    }
    // Outer spans open first; inner spans close first. Identical spans nest
    // by id.
    auto opens_before = [](const Mention* a, const Mention* b) {
      return std::tuple(a->span.begin, -a->span.end, a->id) <
             std::tuple(b->span.begin, -b->span.end, b->id);
    };
    std::stable_sort(here.begin(), here.end(), opens_before);
    std::string line;
    for (std::size_t t = 0; t < leaves.size(); ++t) {
      if (t > 0) line += ' ';
      for (const auto* m : here) {
        if (m->span.begin == static_cast<int>(t)) line += '[';
      }
      line += tree.node(leaves[t]).token;
      std::vector<const Mention*> closing;
      for (const auto* m : here) {
        if (m->span.end == static_cast<int>(t) + 1) closing.push_back(m);
      }
      std::reverse(closing.begin(), closing.end());
      for (const auto* m : closing) {
        line += "]_" + std::to_string(result.clustering.label_of(m->id));
      }
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string clusters_tsv(const PipelineResult& result) {
  std::string out;
  for (const auto& m : result.mentions) {
    out += result.doc_id;
    out += '\t' + std::to_string(m.sentence_index);
    out += '\t' + std::to_string(m.span.begin);
    out += '\t' + std::to_string(m.span.end);
    out += '\t' + std::to_string(result.clustering.label_of(m.id));
    out += '\n';
  }
  return out;
}

std::vector<std::pair<std::string, std::vector<ClusterRow>>> read_clusters_tsv(std::istream& in) {
  std::vector<std::pair<std::string, std::vector<ClusterRow>>> docs;
  std::map<std::string, std::size_t> slot;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      f.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (f.size() != 5) throw InputError("clusters line " + std::to_string(number) + ": expected 5 fields");
    ClusterRow row;
    try {
      row.span = GoldSpan{std::stoi(f[1]), std::stoi(f[2]), std::stoi(f[3])};
      row.label = std::stoi(f[4]);
    } catch (const std::exception&) {
      throw InputError("clusters line " + std::to_string(number) + ": expected integers");
    }
    auto [it, fresh] = slot.try_emplace(f[0], docs.size());
    if (fresh) docs.emplace_back(f[0], std::vector<ClusterRow>{});
    docs[it->second].second.push_back(row);
  }
  return docs;
}

Clustering align_rows_to_gold(const std::vector<ClusterRow>& rows, const DocumentInput& input) {
  const auto no_spans = std::vector<GoldSpan>{};
  const auto& spans = input.gold_mentions ? *input.gold_mentions : no_spans;
  auto index = gold_index_by_span(spans);
  const int offset = static_cast<int>(spans.size());
  std::vector<MentionId> universe;
  std::vector<int> labels;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto it = index.find(rows[i].span);
    if (it != index.end()) {
      universe.push_back(it->second);
      index.erase(it);
    } else {
      universe.push_back(offset + static_cast<int>(i));
    }
    labels.push_back(rows[i].label);
  }
  return Clustering(std::move(universe), labels);
}

}  // namespace coref
