#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "olap/error.hpp"
#include "olap/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Mines MDX query logs into annotated multi-view analyst profiles"};
  app.require_subcommand(1);

  olap::PipelineConfig cfg;
  const char* color_env = std::getenv("OLAP_PROFILER_COLOR");
  cfg.color = color_env != nullptr && std::string_view(color_env) == "1";

  std::string linkage_name = "max-similarity";
  std::string format_name = "text";

  auto add_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--schema", cfg.schema_path, "Multidimensional schema file")->required();
    cmd->add_option("--log", cfg.log_path, "Raw MDX query log")->required();
  };
  auto add_linkage = [&](CLI::App* cmd) {
    cmd->add_option("--linkage", linkage_name, "Inter-cluster linkage rule")
        ->check(CLI::IsMember({"max-similarity", "complete"}))
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output rendering")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
  };
  auto add_k = [&](CLI::App* cmd) {
    cmd->add_option("--k", cfg.target_k, "Number of clusters to keep")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  CLI::App* preprocess = app.add_subcommand("preprocess", "Emit segmented and tagged XML");
  add_inputs(preprocess);
  preprocess->add_option("--out", cfg.out_path,
                         "Directory for segmented.xml and tagged.xml (stdout when omitted)");

  std::size_t query_a = 0, query_b = 0;
  CLI::App* similarity = app.add_subcommand("similarity", "Similarity of two logged queries");
  add_inputs(similarity);
  similarity->add_option("a", query_a, "First query index (1-based, log order)")->required();
  similarity->add_option("b", query_b, "Second query index (1-based, log order)")->required();
  add_format(similarity);

  CLI::App* cluster = app.add_subcommand("cluster", "Agglomerate the corpus into k pools");
  add_inputs(cluster);
  add_k(cluster);
  add_linkage(cluster);
  add_format(cluster);

  CLI::App* profile = app.add_subcommand("profile", "Mine, enrich, annotate and save a profile");
  add_inputs(profile);
  profile->add_option("--views", cfg.views_path, "Personal/professional views sidecar file");
  profile->add_option("--out", cfg.out_path, "Profile document output path")->required();
  add_k(profile);
  add_linkage(profile);

  std::string labels_path;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Score predicted pool labels");
  evaluate->add_option("labels", labels_path, "Label file: query_id<TAB>gold<TAB>predicted")
      ->required();
  add_format(evaluate);

  CLI11_PARSE(app, argc, argv);

  cfg.linkage = linkage_name == "complete" ? olap::LinkageMode::complete
                                           : olap::LinkageMode::max_similarity;
  cfg.format =
      format_name == "structured" ? olap::OutputFormat::structured : olap::OutputFormat::text;

  try {
    if (preprocess->parsed()) {
      olap::run_preprocess(cfg, std::cout, std::cerr);
    } else if (similarity->parsed()) {
      olap::run_similarity(cfg, query_a, query_b, std::cout);
    } else if (cluster->parsed()) {
      olap::run_cluster(cfg, std::cout, std::cerr);
    } else if (profile->parsed()) {
      olap::run_profile(cfg, std::cout, std::cerr);
    } else if (evaluate->parsed()) {
      olap::run_evaluate(cfg, labels_path, std::cout);
    }
  } catch (const olap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
