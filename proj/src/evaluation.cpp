#include "olap/evaluation.hpp"

#include <set>

#include "json.hpp"
#include "olap/error.hpp"
#include "olap/io.hpp"

namespace olap {

namespace {

// Table rows follow the report convention: the default class first.
constexpr std::array<PoolLabel, 3> kReportOrder{
    PoolLabel::conflicting, PoolLabel::semi_conflicting, PoolLabel::consensual};

std::optional<Rational> ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::string cell(const std::optional<Rational>& value) {
  return value ? value->decimal_str() : "NA";
}

}  // namespace

std::optional<Rational> f_measure(const std::optional<Rational>& precision,
                                  const std::optional<Rational>& recall) {
  if (!precision || !recall) return std::nullopt;
  Rational sum = *precision + *recall;
  if (sum.is_zero()) return std::nullopt;
  return Rational(2, 1) * *precision * *recall / sum;
}

EvalReport evaluate(const LabeledDataset& data) {
  if (data.items.empty()) throw Error("cannot evaluate an empty dataset");
  EvalReport report;
  for (const LabeledItem& item : data.items)
    ++report.confusion[static_cast<std::size_t>(item.gold)]
                      [static_cast<std::size_t>(item.predicted)];

  const std::size_t total = data.items.size();
  for (std::size_t x = 0; x < kPoolLabels.size(); ++x) {
    std::size_t gold_x = 0, pred_x = 0;
    for (std::size_t other = 0; other < kPoolLabels.size(); ++other) {
      gold_x += report.confusion[x][other];
      pred_x += report.confusion[other][x];
    }
    std::size_t tp = report.confusion[x][x];

    ClassMetrics& m = report.per_class[x];
    m.recall = ratio(tp, gold_x);
    m.tp_rate = m.recall;
    m.precision = ratio(tp, pred_x);
    m.fp_rate = ratio(pred_x - tp, total - gold_x);
    m.f_measure = f_measure(m.precision, m.recall);
  }
  return report;
}

// ---- label file -----------------------------------------------------------

LabeledDataset read_labels(std::string_view text) {
  LabeledDataset data;
  std::set<std::string, std::less<>> seen;
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty()) continue;

    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab1 == std::string_view::npos || tab2 == std::string_view::npos ||
        line.find('\t', tab2 + 1) != std::string_view::npos)
      throw Error("line " + std::to_string(line_no) +
                  ": expected 'query_id<TAB>gold<TAB>predicted'");

    std::string_view id = line.substr(0, tab1);
    std::string_view gold_tok = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::string_view pred_tok = line.substr(tab2 + 1);
    if (id.empty()) throw Error("line " + std::to_string(line_no) + ": empty query id");
    if (!seen.emplace(id).second)
      throw Error("line " + std::to_string(line_no) + ": duplicate query id '" +
                  std::string(id) + "'");

    auto gold = parse_label_lenient(gold_tok);
    if (!gold)
      throw Error("line " + std::to_string(line_no) + ": unknown label '" +
                  std::string(gold_tok) + "'");
    auto pred = parse_label_lenient(pred_tok);
    if (!pred)
      throw Error("line " + std::to_string(line_no) + ": unknown label '" +
                  std::string(pred_tok) + "'");
    data.items.push_back({std::string(id), *gold, *pred});
  }
  return data;
}

LabeledDataset load_labels(const std::string& path) {
  std::string text = read_file(path);
  try {
    return read_labels(text);
  } catch (const Error& e) {
    throw Error("labels '" + path + "': " + e.what());
  }
}

// ---- renderings -------------------------------------------------------

std::string render_report(const EvalReport& report, bool color) {
  struct Column {
    std::string_view header;
    std::size_t width;
  };
  constexpr Column columns[] = {
      {"TP Rate", 7}, {"FP Rate", 7}, {"Precision", 9}, {"Recall", 6}, {"F-Measure", 9}};

  auto pad_left = [](std::string_view s, std::size_t width) {
    std::string out;
    if (s.size() < width) out.append(width - s.size(), ' ');
    out += s;
    return out;
  };

  std::string out;
  if (color) out += "\x1b[1m";
  for (const Column& c : columns) {
    out += pad_left(c.header, c.width);
    out += "  ";
  }
  out += "Class";
  if (color) out += "\x1b[0m";
  out += '\n';

  for (PoolLabel label : kReportOrder) {
    const ClassMetrics& m = report.metrics(label);
    const std::optional<Rational>* values[] = {&m.tp_rate, &m.fp_rate, &m.precision, &m.recall,
                                               &m.f_measure};
    for (std::size_t i = 0; i < std::size(values); ++i) {
      out += pad_left(cell(*values[i]), columns[i].width);
      out += "  ";
    }
    if (color) {
      const char* tint = label == PoolLabel::conflicting        ? "\x1b[31m"
                         : label == PoolLabel::semi_conflicting ? "\x1b[33m"
                                                                : "\x1b[32m";
      out += tint;
      out += label_display(label);
      out += "\x1b[0m";
    } else {
      out += label_display(label);
    }
    out += '\n';
  }
  return out;
}

std::string report_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  for (PoolLabel label : kReportOrder) {
    const ClassMetrics& m = report.metrics(label);
    nlohmann::ordered_json row;
    auto put = [&row](const char* key, const std::optional<Rational>& value) {
      if (value)
        row[key] = {{"exact", value->fraction_str()}, {"value", value->decimal_str()}};
      else
        row[key] = nullptr;
    };
    put("tp_rate", m.tp_rate);
    put("fp_rate", m.fp_rate);
    put("precision", m.precision);
    put("recall", m.recall);
    put("f_measure", m.f_measure);
    j["classes"][std::string(label_token(label))] = std::move(row);
  }
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (PoolLabel label : kPoolLabels) labels.push_back(std::string(label_token(label)));
  j["confusion"]["labels"] = std::move(labels);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.confusion) rows.push_back(row);
  j["confusion"]["gold_by_predicted"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace olap
