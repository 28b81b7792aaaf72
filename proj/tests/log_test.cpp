#include "olap/log.hpp"

#include <string>

#include "doctest.h"
#include "olap/mdx.hpp"
#include "test_support.hpp"

using namespace olap;
using olap::testing::contains;
using olap::testing::error_of;

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

const char* kSessionLog = R"(-- session: SalesManager1
SELECT [Measures].[Sales Amount] ON COLUMNS, [Date].[All] ON ROWS
FROM Sales
WHERE ([Customer].[France].[Lyon]);
SELECT [Measures].[Sales Amount] ON COLUMNS, [Date].[2010], [Date].[2011] ON ROWS
FROM Sales
WHERE ([Customer].[France].[Lyon]);
SELECT [Measures].[Sales Amount] ON COLUMNS, [Product].[Astradol] ON ROWS
FROM Sales
SELECT [Measures].[Sales Amount] ON COLUMNS, [Date].[All] ON ROWS
FROM Sales
WHERE ([Customer].[France].[Lyon]);
)";

}  // namespace

TEST_CASE("segment_log splits sessions and statements") {
  RawLog raw = segment_log(kSessionLog);
  REQUIRE(raw.sessions.size() == 1);
  const RawSession& s = raw.sessions[0];
  CHECK(s.id == "SalesManager1");
  REQUIRE(s.queries.size() == 4);
  // Multi-line statements are joined line by line; the ';' terminator is dropped.
  CHECK(s.queries[0] ==
        "SELECT [Measures].[Sales Amount] ON COLUMNS, [Date].[All] ON ROWS\n"
        "FROM Sales\n"
        "WHERE ([Customer].[France].[Lyon])");
  CHECK_FALSE(contains(s.queries[0], ";"));
  // Statement 3 has no ';' — the next SELECT line ends it.
  CHECK(contains(s.queries[2], "[Product].[Astradol]"));
  CHECK(contains(s.queries[3], "[Date].[All]"));
  // Identical texts stay separate occurrences.
  CHECK(s.queries[0] == s.queries[3]);
}

TEST_CASE("segment_log keeps sessions in file order") {
  RawLog raw = segment_log(
      "-- session: A\n"
      "SELECT [X].[Y] ON ROWS FROM C;\n"
      "-- session: B\n"
      "SELECT [X].[Z] ON ROWS FROM C;\n"
      "-- session: A\n"
      "SELECT [X].[Y] ON ROWS FROM C;\n");
  REQUIRE(raw.sessions.size() == 3);
  CHECK(raw.sessions[0].id == "A");
  CHECK(raw.sessions[1].id == "B");
  CHECK(raw.sessions[2].id == "A");  // same id, separate session
  CHECK(raw.sessions[0].queries.size() == 1);
}

TEST_CASE("statements split within a line at ';'") {
  RawLog raw = segment_log(
      "-- session: S\n"
      "SELECT [A].[B] ON ROWS FROM C; SELECT [A].[D] ON ROWS FROM C;\n");
  REQUIRE(raw.sessions.size() == 1);
  REQUIRE(raw.sessions[0].queries.size() == 2);
  CHECK(raw.sessions[0].queries[0] == "SELECT [A].[B] ON ROWS FROM C");
  CHECK(raw.sessions[0].queries[1] == "SELECT [A].[D] ON ROWS FROM C");
}

TEST_CASE("an unterminated final statement flushes at end of input") {
  RawLog raw = segment_log("-- session: S\nSELECT [A].[B] ON ROWS FROM C");
  REQUIRE(raw.sessions.size() == 1);
  REQUIRE(raw.sessions[0].queries.size() == 1);
  CHECK(raw.sessions[0].queries[0] == "SELECT [A].[B] ON ROWS FROM C");
}

TEST_CASE("empty input gives an empty log") {
  CHECK(segment_log("").sessions.empty());
  CHECK(segment_log("\n\n").sessions.empty());
}

TEST_CASE("a session may contain no statements") {
  RawLog raw = segment_log("-- session: idle\n");
  REQUIRE(raw.sessions.size() == 1);
  CHECK(raw.sessions[0].queries.empty());
}

TEST_CASE("segment_log errors name the line") {
  CHECK(contains(error_of([] { segment_log("SELECT [A].[B] ON ROWS FROM C;\n"); }),
                 "line 1: statement outside any session"));
  CHECK(contains(error_of([] { segment_log("-- session:\n"); }),
                 "line 1: session header missing id"));
  CHECK(contains(error_of([] { segment_log("-- sess A\n"); }),
                 "line 1: malformed session header (expected '-- session: <id>')"));
  CHECK(contains(error_of([] {
                   segment_log("-- session: S\nSELECT [A].[B] ON ROWS FROM C;\n-- nonsense\n");
                 }),
                 "line 3: malformed session header"));
}

TEST_CASE("recognize_entities tags every statement against the schema") {
  SchemaDef schema = parse_schema(kSchemaText);
  TaggedLog tagged = recognize_entities(segment_log(kSessionLog), schema);
  REQUIRE(tagged.sessions.size() == 1);
  REQUIRE(tagged.sessions[0].queries.size() == 4);
  CHECK(tagged.sessions[0].id == "SalesManager1");
  // q1 and q4 are the same analysis.
  CHECK(tagged.sessions[0].queries[0] == tagged.sessions[0].queries[3]);
  CHECK(tagged.sessions[0].queries[0].dim_attrs.at("Date").size() == 5);

  std::vector<ParsedQuery> flat = flatten(tagged);
  REQUIRE(flat.size() == 4);
  CHECK(flat[0] == tagged.sessions[0].queries[0]);
  CHECK(flat[2].cube == "Sales");
}

TEST_CASE("recognize_entities errors carry session and query position") {
  SchemaDef schema = parse_schema(kSchemaText);
  std::string msg = error_of([&] {
    recognize_entities(
        segment_log("-- session: S7\n"
                    "SELECT [Measures].[Sales Amount] ON COLUMNS FROM Sales;\n"
                    "SELECT [Measures].[Profit] ON COLUMNS FROM Sales;\n"),
        schema);
  });
  CHECK(contains(msg, "session 'S7' query 2:"));
  CHECK(contains(msg, "unrecognized entity '[Measures].[Profit]'"));
}

TEST_CASE("concatenating logs concatenates their sessions") {
  std::string a = "-- session: A\nSELECT [X].[Y] ON ROWS FROM C;\n";
  std::string b = "-- session: B\nSELECT [X].[Z] ON ROWS FROM C;\n";
  RawLog joined = segment_log(a + b);
  RawLog first = segment_log(a);
  RawLog second = segment_log(b);
  REQUIRE(joined.sessions.size() == 2);
  CHECK(joined.sessions[0] == first.sessions[0]);
  CHECK(joined.sessions[1] == second.sessions[0]);
}
