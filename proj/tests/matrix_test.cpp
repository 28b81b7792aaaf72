#include "olap/matrix.hpp"

#include <vector>

#include "doctest.h"
#include "olap/mdx.hpp"
#include "olap/similarity.hpp"
#include "random_queries.hpp"

using namespace olap;

namespace {

const char* kSchemaText = R"(cube Sales
  measure Sales Amount
  dimension Date
    member 2008
    member 2009
    member 2010
    member 2011
    member 2012
  dimension Customer
    member France.Lyon
    member France.Paris
    member Tunisia.Tunis
  dimension Product
    member Astradol
)";

std::vector<ParsedQuery> worked_corpus() {
  SchemaDef schema = parse_schema(kSchemaText);
  return {
      parse_mdx("SELECT [Measures].[Sales Amount] ON COLUMNS, [Date].[All] ON ROWS "
                "FROM Sales WHERE ([Customer].[France].[Lyon])",
                schema),
      parse_mdx("SELECT [Measures].[Sales Amount] ON COLUMNS, [Date].[2010], [Date].[2011] "
                "ON ROWS FROM Sales WHERE ([Customer].[France].[Lyon])",
                schema),
      parse_mdx("SELECT [Measures].[Sales Amount] ON COLUMNS, [Product].[Astradol] ON ROWS "
                "FROM Sales",
                schema),
  };
}

}  // namespace

TEST_CASE("matrix holds all pairwise similarities with a zero diagonal") {
  std::vector<ParsedQuery> corpus = worked_corpus();
  SimilarityMatrix m = build_matrix_serial(corpus);
  REQUIRE(m.n == 3);
  CHECK(m.at(0, 1) == Rational(5, 8));
  CHECK(m.at(0, 2) == Rational(2, 9));
  CHECK(m.at(1, 2) == Rational(1, 3));
  for (std::size_t i = 0; i < m.n; ++i) {
    CHECK(m.at(i, i) == Rational());
    for (std::size_t j = 0; j < m.n; ++j) CHECK(m.at(i, j) == m.at(j, i));
  }
}

TEST_CASE("parallel construction equals the serial reference") {
  testing::RandomQueryGen gen(7);
  for (std::size_t n : {0u, 1u, 2u, 17u, 64u}) {
    std::vector<ParsedQuery> corpus;
    corpus.reserve(n);
    for (std::size_t i = 0; i < n; ++i) corpus.push_back(gen.next());
    SimilarityMatrix serial = build_matrix_serial(corpus);
    SimilarityMatrix parallel = build_matrix(corpus);
    REQUIRE(serial == parallel);
    REQUIRE(serial.n == n);
  }
}

TEST_CASE("matrix entries match direct jaccard calls") {
  testing::RandomQueryGen gen(99);
  std::vector<ParsedQuery> corpus;
  for (int i = 0; i < 12; ++i) corpus.push_back(gen.next());
  SimilarityMatrix m = build_matrix(corpus);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) {
      if (i == j) continue;
      CHECK(m.at(i, j) == jaccard(corpus[i], corpus[j]));
    }
}
