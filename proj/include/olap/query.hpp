#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>

#include "olap/schema.hpp"

namespace olap {

struct SlicerMember {
  std::string dimension;
  MemberPath path;

  auto operator<=>(const SlicerMember&) const = default;
  bool operator==(const SlicerMember&) const = default;
};

// One query in canonical form. Ordered containers make equality, ordering
// and serialization independent of the source text's axis and member order,
// so repeated queries dedupe regardless of how they were written.
struct ParsedQuery {
  std::string cube;                                     // FROM clause, exactly one
  std::set<std::string> measures;                       // from any axis
  std::map<std::string, std::set<MemberPath>> dim_attrs;  // per-dimension members, All expanded
  std::set<SlicerMember> slicer;                        // WHERE members, full-path identity

  auto operator<=>(const ParsedQuery&) const = default;
  bool operator==(const ParsedQuery&) const = default;
};

// Single-line canonical MDX rendering: measures ON COLUMNS, dimension
// attributes ON ROWS, slicer in WHERE, everything sorted. Parses back to an
// equal ParsedQuery via the syntactic parser.
std::string render_canonical(const ParsedQuery& q);

}  // namespace olap
