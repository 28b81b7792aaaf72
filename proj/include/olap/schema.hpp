#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace olap {

// A member path is the ordered list of level names identifying one concrete
// member of a dimension, e.g. {"France", "Lyon"}.
using MemberPath = std::vector<std::string>;

// "France.Lyon"
std::string join_path(const MemberPath& path);

// {"Customer", "France", "Lyon"} -> "[Customer].[France].[Lyon]"
std::string bracket_path(std::span<const std::string> segments);

// "[Customer].[France].[Lyon]" -> {"Customer", "France", "Lyon"};
// nullopt when the token is not a well-formed bracketed path.
std::optional<std::vector<std::string>> unbracket_path(std::string_view token);

struct DimensionDef {
  std::string name;
  std::vector<MemberPath> members;  // declaration order preserved

  bool has_member(const MemberPath& path) const;
};

struct CubeDef {
  std::string name;
  std::set<std::string> measures;
  std::vector<DimensionDef> dimensions;

  bool has_measure(std::string_view m) const;
  const DimensionDef* find_dimension(std::string_view name) const;
};

// The multidimensional schema doubles as the named-entity dictionary: every
// token in a query is classified by looking it up here.
struct SchemaDef {
  std::vector<CubeDef> cubes;

  const CubeDef* find_cube(std::string_view name) const;
};

struct MeasureRef {
  std::string name;
};
struct MemberRef {
  std::string dimension;
  MemberPath path;
};
struct AllMembersRef {
  std::string dimension;
};
struct UnknownRef {};

using EntityKind = std::variant<MeasureRef, MemberRef, AllMembersRef, UnknownRef>;

// Classifies a bracketed token against one cube's dictionary.
//   [Measures].[Sales Amount] -> MeasureRef
//   [Date].[All]              -> AllMembersRef
//   [Customer].[France].[Lyon]-> MemberRef
// Anything else (including malformed tokens) -> UnknownRef.
EntityKind lookup_entity(const SchemaDef& schema, const std::string& cube,
                         std::string_view token);
EntityKind lookup_entity(const SchemaDef& schema, const std::string& cube,
                         std::span<const std::string> segments);

// Parses the line-oriented schema file format:
//
//   cube Sales
//     measure Sales Amount
//     dimension Date
//       member 2010
//
// Two-space indentation, '#' comment lines, member paths dotted.
// Throws Error naming the offending line on duplicates, empty dimensions,
// reserved names, or malformed structure.
SchemaDef parse_schema(std::string_view text);

}  // namespace olap
