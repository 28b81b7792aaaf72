#pragma once

#include <cstddef>

#include "olap/query.hpp"
#include "olap/rational.hpp"

namespace olap {

// Per-query component tally used by the multidimensional Jaccard measure.
struct ComponentCounts {
  std::size_t facts = 0;     // 1 per query (the cube reference)
  std::size_t measures = 0;  // distinct measures
  std::size_t attrs = 0;     // distinct dimension attributes across all axes
  std::size_t slicers = 0;   // distinct slicer members

  std::size_t total() const { return facts + measures + attrs + slicers; }

  bool operator==(const ComponentCounts&) const = default;
};

ComponentCounts count_components(const ParsedQuery& q);

// Components shared by both queries: same cube, common measures, common
// attribute paths per dimension, and common slicer members (full path).
std::size_t common_components(const ParsedQuery& a, const ParsedQuery& b);

// J(a, b) = common / (total(a) + total(b) - common).
Rational jaccard(const ParsedQuery& a, const ParsedQuery& b);

}  // namespace olap
