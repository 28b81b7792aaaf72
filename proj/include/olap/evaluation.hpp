#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "olap/labels.hpp"
#include "olap/rational.hpp"

namespace olap {

struct LabeledItem {
  std::string query_id;
  PoolLabel gold;
  PoolLabel predicted;

  bool operator==(const LabeledItem&) const = default;
};

struct LabeledDataset {
  std::vector<LabeledItem> items;

  bool operator==(const LabeledDataset&) const = default;
};

// Per-class rates; nullopt marks an undefined (0/0) metric, rendered "NA".
struct ClassMetrics {
  std::optional<Rational> tp_rate;
  std::optional<Rational> fp_rate;
  std::optional<Rational> precision;
  std::optional<Rational> recall;
  std::optional<Rational> f_measure;

  bool operator==(const ClassMetrics&) const = default;
};

struct EvalReport {
  // Both indexed by PoolLabel order; confusion is [gold][predicted].
  std::array<ClassMetrics, kPoolLabels.size()> per_class;
  std::array<std::array<std::size_t, kPoolLabels.size()>, kPoolLabels.size()> confusion{};

  const ClassMetrics& metrics(PoolLabel label) const {
    return per_class[static_cast<std::size_t>(label)];
  }
  std::size_t count(PoolLabel gold, PoolLabel predicted) const {
    return confusion[static_cast<std::size_t>(gold)][static_cast<std::size_t>(predicted)];
  }

  bool operator==(const EvalReport&) const = default;
};

// Harmonic mean 2PR/(P+R); undefined when either input is undefined or when
// P + R = 0.
std::optional<Rational> f_measure(const std::optional<Rational>& precision,
                                  const std::optional<Rational>& recall);

// Computes per-class TP rate (= recall), FP rate, precision, recall and
// F-measure plus the confusion matrix. Throws on an empty dataset.
EvalReport evaluate(const LabeledDataset& data);

// Tab-separated label records: query_id<TAB>gold<TAB>predicted, one per
// line, CRLF tolerated, blank lines skipped. Label tokens are matched
// case-insensitively with '_'/' ' accepted for '-'. Errors name the line.
LabeledDataset read_labels(std::string_view text);
LabeledDataset load_labels(const std::string& path);

// Aligned table with columns TP Rate, FP Rate, Precision, Recall, F-Measure,
// Class; one row per class, conflicting first. `color` adds ANSI styling.
std::string render_report(const EvalReport& report, bool color = false);

// Machine-readable JSON rendering of the same report.
std::string report_json(const EvalReport& report);

}  // namespace olap
