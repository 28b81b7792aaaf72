#include "olap/query.hpp"

namespace olap {

namespace {

void append_bracketed(std::string& out, std::initializer_list<const std::string*> head,
                      const MemberPath& tail) {
  bool first = true;
  for (const std::string* seg : head) {
    if (!first) out += '.';
    out += '[' + *seg + ']';
    first = false;
  }
  for (const auto& seg : tail) {
    if (!first) out += '.';
    out += '[' + seg + ']';
    first = false;
  }
}

}  // namespace

std::string render_canonical(const ParsedQuery& q) {
  static const std::string kMeasures = "Measures";
  std::string out = "SELECT ";
  bool first_axis = true;

  if (!q.measures.empty()) {
    bool first = true;
    for (const auto& m : q.measures) {
      if (!first) out += ", ";
      append_bracketed(out, {&kMeasures, &m}, {});
      first = false;
    }
    out += " ON COLUMNS";
    first_axis = false;
  }
  if (!q.dim_attrs.empty()) {
    if (!first_axis) out += ", ";
    bool first = true;
    for (const auto& [dim, paths] : q.dim_attrs) {
      for (const auto& path : paths) {
        if (!first) out += ", ";
        append_bracketed(out, {&dim}, path);
        first = false;
      }
    }
    out += " ON ROWS";
  }
  out += " FROM " + q.cube;
  if (!q.slicer.empty()) {
    out += " WHERE (";
    bool first = true;
    for (const auto& s : q.slicer) {
      if (!first) out += ", ";
      append_bracketed(out, {&s.dimension}, s.path);
      first = false;
    }
    out += ")";
  }
  return out;
}

}  // namespace olap
