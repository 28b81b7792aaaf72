#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "olap/log.hpp"

namespace olap {

// Segmented rendering: each statement split into its syntactic parts, no
// schema involved. Element vocabulary: Log, Query, Columns, Rows, Cube,
// Condition, with 1-based ids counted per element kind within a query.

enum class SegmentKind { columns, rows, cube, condition };

struct SegmentedItem {
  SegmentKind kind;
  std::string text;

  bool operator==(const SegmentedItem&) const = default;
};

struct SegmentedQuery {
  std::vector<SegmentedItem> items;  // Columns*, Rows*, Cube, Condition*

  bool operator==(const SegmentedQuery&) const = default;
};

struct SegmentedSession {
  std::string id;
  std::vector<SegmentedQuery> queries;

  bool operator==(const SegmentedSession&) const = default;
};

struct SegmentedDoc {
  std::vector<SegmentedSession> sessions;

  bool operator==(const SegmentedDoc&) const = default;
};

// Splits every statement syntactically. Malformed statements throw, prefixed
// with session id and query index.
SegmentedDoc segment_queries(const RawLog& raw);

std::string render_segmented_xml(const SegmentedDoc& doc);

// render_segmented_xml(segment_queries(raw))
std::string emit_segmented_xml(const RawLog& raw);

SegmentedDoc parse_segmented_xml(std::string_view xml);

// Tagged rendering: entity vocabulary Measure, Dimension, Member, Cube,
// Condition. Axis dimensions list their referenced member paths; each slicer
// is rendered as a Condition plus a Dimension block tagging its path levels.
// Dimension ids run per query; Member ids restart inside each Dimension.
std::string emit_tagged_xml(const TaggedLog& tagged);

TaggedLog parse_tagged_xml(std::string_view xml);

}  // namespace olap
