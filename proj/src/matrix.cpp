#include "olap/matrix.hpp"

#include <cstdint>

#include "olap/similarity.hpp"

namespace olap {

namespace {

// Upper triangle of row i (j > i), mirrored into the lower triangle. The
// diagonal stays 0 by convention.
void fill_row(SimilarityMatrix& m, std::span<const ParsedQuery> queries, std::size_t i) {
  for (std::size_t j = i + 1; j < m.n; ++j) {
    Rational s = jaccard(queries[i], queries[j]);
    m.at(i, j) = s;
    m.at(j, i) = s;
  }
}

}  // namespace

SimilarityMatrix build_matrix_serial(std::span<const ParsedQuery> queries) {
  SimilarityMatrix m(queries.size());
  for (std::size_t i = 0; i < m.n; ++i) fill_row(m, queries, i);
  return m;
}

SimilarityMatrix build_matrix(std::span<const ParsedQuery> queries) {
  SimilarityMatrix m(queries.size());
  const std::int64_t n = static_cast<std::int64_t>(m.n);
  // Rows shrink as i grows, so dynamic scheduling keeps the threads busy.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) fill_row(m, queries, static_cast<std::size_t>(i));
  return m;
}

}  // namespace olap
