#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "olap/query.hpp"
#include "olap/schema.hpp"

namespace olap {

struct RawSession {
  std::string id;
  std::vector<std::string> queries;  // statement texts, trimmed

  bool operator==(const RawSession&) const = default;
};

struct RawLog {
  std::vector<RawSession> sessions;  // file order, same-id sessions kept apart

  bool operator==(const RawLog&) const = default;
};

struct TaggedSession {
  std::string id;
  std::vector<ParsedQuery> queries;

  bool operator==(const TaggedSession&) const = default;
};

struct TaggedLog {
  std::vector<TaggedSession> sessions;

  bool operator==(const TaggedLog&) const = default;
};

// Splits a raw log into sessions and statements.
//
//   -- session: SalesManager1
//   SELECT ... FROM Sales WHERE (...);
//   SELECT ...
//
// Session boundaries are '-- session: <id>' header lines. Statements end at
// ';' or wherever a new line starts with SELECT. Empty input gives an empty
// log; statements outside a session and malformed headers are errors naming
// the line.
RawLog segment_log(std::string_view text);

// Parses and tags every statement against the schema dictionary. Errors are
// prefixed with the session id and 1-based query index they occurred in.
TaggedLog recognize_entities(const RawLog& raw, const SchemaDef& schema);

// All query occurrences in log order, flattened across sessions.
std::vector<ParsedQuery> flatten(const TaggedLog& tagged);

}  // namespace olap
