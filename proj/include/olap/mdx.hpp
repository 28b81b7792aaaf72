#pragma once

#include <string_view>
#include <vector>

#include "olap/query.hpp"
#include "olap/schema.hpp"

namespace olap {

// Grammar subset (keywords case-insensitive):
//
//   query  := SELECT axis ("," axis)* FROM cube [WHERE "(" member ("," member)* ")"] [";"]
//   axis   := member ("," member)* ON (COLUMNS | ROWS)
//   member := "[" name "]" ("." "[" name "]")+
//   cube   := bare word
//
// Anything outside the subset is a parse error, never a silent skip.

enum class AxisKind { columns, rows };

struct SyntacticMember {
  std::vector<std::string> segments;  // >= 2
};

struct SyntacticAxis {
  AxisKind kind;
  std::vector<SyntacticMember> members;  // source order
};

struct SyntacticQuery {
  std::vector<SyntacticAxis> axes;  // source order
  std::string cube;
  std::vector<SyntacticMember> where;  // source order, empty when no WHERE
};

// Schema-free grammar parse. Throws Error with a 1-based character offset on
// malformed input.
SyntacticQuery parse_mdx_syntax(std::string_view text);

// Full parse against the schema dictionary: classifies every token, expands
// [D].[All] to all declared members of D, and builds the canonical query.
// Throws Error on unknown cubes, unrecognized entities, and measure or All
// references inside WHERE.
ParsedQuery parse_mdx(std::string_view text, const SchemaDef& schema);

// Rebuilds a canonical query from syntax alone, trusting every token:
// [Measures].[X] becomes a measure, any other path a dimension attribute.
// Used to load canonical renderings, which never contain [All].
ParsedQuery from_syntax_unchecked(const SyntacticQuery& syn);

}  // namespace olap
