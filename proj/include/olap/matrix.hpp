#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "olap/query.hpp"
#include "olap/rational.hpp"

namespace olap {

// Dense symmetric pairwise-similarity matrix, row-major. The diagonal is 0
// by convention (self-similarity is never consulted).
struct SimilarityMatrix {
  std::size_t n = 0;
  std::vector<Rational> cells;

  explicit SimilarityMatrix(std::size_t size = 0) : n(size), cells(size * size) {}

  Rational& at(std::size_t i, std::size_t j) { return cells[i * n + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return cells[i * n + j]; }

  bool operator==(const SimilarityMatrix&) const = default;
};

// Straightforward single-threaded construction; the reference the parallel
// kernel is checked against.
SimilarityMatrix build_matrix_serial(std::span<const ParsedQuery> queries);

// OpenMP row-parallel construction. Exact rational arithmetic makes the
// result identical to the serial reference regardless of thread count.
SimilarityMatrix build_matrix(std::span<const ParsedQuery> queries);

}  // namespace olap
