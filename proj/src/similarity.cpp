#include "olap/similarity.hpp"

#include <algorithm>

namespace olap {

namespace {

template <typename Set>
std::size_t intersection_size(const Set& a, const Set& b) {
  std::size_t n = 0;
  auto it_a = a.begin();
  auto it_b = b.begin();
  while (it_a != a.end() && it_b != b.end()) {
    if (*it_a < *it_b) ++it_a;
    else if (*it_b < *it_a) ++it_b;
    else ++n, ++it_a, ++it_b;
  }
  return n;
}

}  // namespace

ComponentCounts count_components(const ParsedQuery& q) {
  ComponentCounts c;
  c.facts = q.cube.empty() ? 0 : 1;
  c.measures = q.measures.size();
  for (const auto& [dim, paths] : q.dim_attrs) c.attrs += paths.size();
  c.slicers = q.slicer.size();
  return c;
}

std::size_t common_components(const ParsedQuery& a, const ParsedQuery& b) {
  std::size_t common = 0;
  if (!a.cube.empty() && a.cube == b.cube) ++common;
  common += intersection_size(a.measures, b.measures);
  for (const auto& [dim, paths] : a.dim_attrs) {
    auto it = b.dim_attrs.find(dim);
    if (it != b.dim_attrs.end()) common += intersection_size(paths, it->second);
  }
  common += intersection_size(a.slicer, b.slicer);
  return common;
}

Rational jaccard(const ParsedQuery& a, const ParsedQuery& b) {
  std::size_t common = common_components(a, b);
  std::size_t total = count_components(a).total() + count_components(b).total();
  if (total == 0) return Rational::from_int(1);  // two empty queries are identical
  return Rational(static_cast<std::int64_t>(common),
                  static_cast<std::int64_t>(total - common));
}

}  // namespace olap
