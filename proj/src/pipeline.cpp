#include "olap/pipeline.hpp"

#include <filesystem>
#include <ostream>
#include <utility>

#include "json.hpp"
#include "olap/error.hpp"
#include "olap/evaluation.hpp"
#include "olap/io.hpp"
#include "olap/log.hpp"
#include "olap/profile.hpp"
#include "olap/similarity.hpp"
#include "olap/xml.hpp"

namespace olap {

namespace {

template <typename F>
auto stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(std::string(name) + ": " + e.what());
  }
}

struct Corpus {
  SchemaDef schema;
  RawLog raw;
  TaggedLog tagged;
  std::vector<ParsedQuery> occurrences;
};

Corpus load_corpus(const PipelineConfig& cfg) {
  Corpus c;
  c.schema = stage("schema", [&] { return parse_schema(read_file(cfg.schema_path)); });
  c.raw = stage("segment", [&] { return segment_log(read_file(cfg.log_path)); });
  c.tagged = stage("tag", [&] { return recognize_entities(c.raw, c.schema); });
  c.occurrences = flatten(c.tagged);
  return c;
}

nlohmann::ordered_json similarity_json(const Rational& value) {
  return {{"exact", value.fraction_str()}, {"value", value.decimal_str()}};
}

void print_linkages(const std::vector<QueryCluster>& clusters, LinkageMode mode,
                    std::ostream& out) {
  for (std::size_t i = 0; i < clusters.size(); ++i)
    for (std::size_t j = i + 1; j < clusters.size(); ++j) {
      Rational s = cluster_linkage(clusters[i], clusters[j], mode);
      out << "linkage " << clusters[i].id << " " << clusters[j].id << " = " << s.fraction_str()
          << " (" << s.decimal_str() << ")\n";
    }
}

}  // namespace

void run_preprocess(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  SchemaDef schema = stage("schema", [&] { return parse_schema(read_file(cfg.schema_path)); });
  RawLog raw = stage("segment", [&] { return segment_log(read_file(cfg.log_path)); });
  if (raw.sessions.empty()) err << "warning: log contains no sessions\n";
  std::string segmented = stage("segment", [&] { return emit_segmented_xml(raw); });
  TaggedLog tagged = stage("tag", [&] { return recognize_entities(raw, schema); });
  std::string tagged_xml = emit_tagged_xml(tagged);

  if (cfg.out_path.empty()) {
    out << segmented << tagged_xml;
    return;
  }
  stage("write", [&] {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_path, ec);
    if (ec) throw Error("cannot create directory '" + cfg.out_path + "': " + ec.message());
    write_file((std::filesystem::path(cfg.out_path) / "segmented.xml").string(), segmented);
    write_file((std::filesystem::path(cfg.out_path) / "tagged.xml").string(), tagged_xml);
    return 0;
  });
}

void run_similarity(const PipelineConfig& cfg, std::size_t query_a, std::size_t query_b,
                    std::ostream& out) {
  Corpus corpus = load_corpus(cfg);
  auto check = [&](std::size_t index) {
    if (index == 0 || index > corpus.occurrences.size())
      throw Error("query index " + std::to_string(index) + " out of range; the corpus has " +
                  std::to_string(corpus.occurrences.size()) + " occurrences");
  };
  check(query_a);
  check(query_b);
  Rational s = jaccard(corpus.occurrences[query_a - 1], corpus.occurrences[query_b - 1]);
  if (cfg.format == OutputFormat::structured)
    out << similarity_json(s).dump(2) << "\n";
  else
    out << s.fraction_str() << " = " << s.decimal_str() << "\n";
}

void run_cluster(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  Corpus corpus = load_corpus(cfg);
  if (corpus.occurrences.empty()) err << "warning: log contains no queries\n";
  std::vector<QueryCluster> clusters = dedupe_and_count(corpus.occurrences);
  ClusterResult result =
      stage("cluster", [&] { return agglomerate(std::move(clusters), cfg.target_k, cfg.linkage); });

  if (cfg.format == OutputFormat::structured) {
    nlohmann::ordered_json j;
    j["trace"] = nlohmann::ordered_json::array();
    for (const MergeStep& step : result.trace)
      j["trace"].push_back({{"left", step.left},
                            {"right", step.right},
                            {"merged", step.merged},
                            {"similarity", similarity_json(step.similarity)}});
    j["linkages"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < result.clusters.size(); ++i)
      for (std::size_t k = i + 1; k < result.clusters.size(); ++k)
        j["linkages"].push_back(
            {{"left", result.clusters[i].id},
             {"right", result.clusters[k].id},
             {"similarity", similarity_json(cluster_linkage(result.clusters[i],
                                                            result.clusters[k], cfg.linkage))}});
    j["clusters"] = nlohmann::ordered_json::array();
    for (const QueryCluster& c : result.clusters) {
      nlohmann::ordered_json queries = nlohmann::ordered_json::array();
      for (const ParsedQuery& q : c.queries) queries.push_back(render_canonical(q));
      j["clusters"].push_back(
          {{"id", c.id}, {"frequency", c.frequency}, {"queries", std::move(queries)}});
    }
    out << j.dump(2) << "\n";
    return;
  }

  out << render_trace(result.trace);
  print_linkages(result.clusters, cfg.linkage, out);
  for (const QueryCluster& c : result.clusters) {
    out << "cluster " << c.id << " frequency=" << c.frequency << "\n";
    for (const ParsedQuery& q : c.queries) out << "  query " << render_canonical(q) << "\n";
  }
}

void run_profile(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  Corpus corpus = load_corpus(cfg);
  std::vector<QueryCluster> clusters = dedupe_and_count(corpus.occurrences);
  ClusterResult result =
      stage("cluster", [&] { return agglomerate(std::move(clusters), cfg.target_k, cfg.linkage); });

  out << render_trace(result.trace);
  print_linkages(result.clusters, cfg.linkage, out);

  if (result.clusters.size() < kPoolLabels.size()) {
    err << "warning: only " << result.clusters.size() << " cluster(s); "
        << kPoolLabels.size() - result.clusters.size() << " pool(s) left empty\n";
    while (result.clusters.size() < kPoolLabels.size()) result.clusters.push_back({"", {}, 0});
  }
  PreferencePools pools = stage("label", [&] { return label_pools(std::move(result.clusters)); });

  ViewsFile views;
  if (!cfg.views_path.empty()) views = stage("views", [&] { return load_views(cfg.views_path); });
  std::string analyst_id = views.analyst_id;
  if (analyst_id.empty())
    analyst_id = corpus.raw.sessions.empty() ? "analyst" : corpus.raw.sessions.front().id;

  AnalystProfile profile = stage("enrich", [&] {
    return enrich(std::move(pools), std::move(analyst_id), std::move(views.personal),
                  std::move(views.professional));
  });
  AnnotatedProfile annotated =
      stage("annotate", [&] { return annotate(std::move(profile), corpus.occurrences); });

  for (PoolLabel label : kPoolLabels) {
    const QueryCluster& c = annotated.profile.behavioral.pool(label);
    out << "pool " << label_token(label);
    if (!c.id.empty()) out << " " << c.id;
    out << " frequency=" << c.frequency << "\n";
  }

  stage("save", [&] {
    if (cfg.out_path.empty()) throw Error("no output path set");
    save_profile(annotated, cfg.out_path);
    return 0;
  });
}

void run_evaluate(const PipelineConfig& cfg, const std::string& labels_path, std::ostream& out) {
  LabeledDataset data = load_labels(labels_path);
  EvalReport report = evaluate(data);
  if (cfg.format == OutputFormat::structured)
    out << report_json(report);
  else
    out << render_report(report, cfg.color);
}

}  // namespace olap
