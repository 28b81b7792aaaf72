#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "olap/clustering.hpp"

namespace olap {

enum class OutputFormat { text, structured };

struct PipelineConfig {
  std::string schema_path;
  std::string log_path;
  std::string views_path;  // optional sidecar
  std::string out_path;    // file for profile, directory for preprocess
  std::size_t target_k = 3;
  LinkageMode linkage = LinkageMode::max_similarity;
  OutputFormat format = OutputFormat::text;
  bool color = false;
};

// Each runner performs one subcommand end-to-end, writing data to `out` and
// diagnostics/warnings to `err`. Failures throw Error prefixed with the
// failing stage's name.

// Emits segmented and tagged XML: to <out_path>/segmented.xml and
// <out_path>/tagged.xml when out_path is set, else both to `out`.
void run_preprocess(const PipelineConfig& cfg, std::ostream& out, std::ostream& err);

// Prints "<fraction> = <decimal>" for the similarity of two corpus
// occurrences (1-based indices in log order).
void run_similarity(const PipelineConfig& cfg, std::size_t query_a, std::size_t query_b,
                    std::ostream& out);

// Clusters the corpus to target_k pools; prints the merge trace, remaining
// pairwise linkages, and the final clusters.
void run_cluster(const PipelineConfig& cfg, std::ostream& out, std::ostream& err);

// Full mining pipeline: segment, tag, dedupe, agglomerate, label, enrich,
// annotate, save to out_path. Prints the merge trace and linkages.
void run_profile(const PipelineConfig& cfg, std::ostream& out, std::ostream& err);

// Reads a gold/predicted label file and prints the metrics report.
void run_evaluate(const PipelineConfig& cfg, const std::string& labels_path, std::ostream& out);

}  // namespace olap
