#include "olap/mdx.hpp"

#include <string>

#include "doctest.h"
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

const SchemaDef& schema() {
  static SchemaDef s = parse_schema(kSchemaText);
  return s;
}

const char* kQ1 =
    "SELECT [Measures].[Sales Amount] ON COLUMNS, [Date].[All] ON ROWS "
    "FROM Sales WHERE ([Customer].[France].[Lyon]);";
const char* kQ2 =
    "SELECT [Measures].[Sales Amount] ON COLUMNS, [Date].[2010], [Date].[2011] ON ROWS "
    "FROM Sales WHERE ([Customer].[France].[Lyon]);";
const char* kQ3 =
    "SELECT [Measures].[Sales Amount] ON COLUMNS, [Product].[Astradol] ON ROWS FROM Sales";

}  // namespace

TEST_CASE("parse_mdx expands [All] and canonicalizes") {
  ParsedQuery q1 = parse_mdx(kQ1, schema());
  CHECK(q1.cube == "Sales");
  CHECK(q1.measures == std::set<std::string>{"Sales Amount"});
  REQUIRE(q1.dim_attrs.count("Date") == 1);
  // [Date].[All] expands to every declared Date member.
  CHECK(q1.dim_attrs.at("Date").size() == 5);
  CHECK(q1.dim_attrs.at("Date").count({"2012"}) == 1);
  REQUIRE(q1.slicer.size() == 1);
  CHECK(q1.slicer.begin()->dimension == "Customer");
  CHECK(q1.slicer.begin()->path == MemberPath{"France", "Lyon"});

  ParsedQuery q2 = parse_mdx(kQ2, schema());
  CHECK(q2.dim_attrs.at("Date") ==
        std::set<MemberPath>{MemberPath{"2010"}, MemberPath{"2011"}});

  ParsedQuery q3 = parse_mdx(kQ3, schema());
  CHECK(q3.slicer.empty());
  CHECK(q3.dim_attrs.at("Product") == std::set<MemberPath>{MemberPath{"Astradol"}});
}

TEST_CASE("queries equal regardless of surface form") {
  // Same attributes spelled member-by-member instead of [All].
  ParsedQuery expanded = parse_mdx(
      "SELECT [Measures].[Sales Amount] ON COLUMNS, [Date].[2008], [Date].[2009], "
      "[Date].[2010], [Date].[2011], [Date].[2012] ON ROWS "
      "FROM Sales WHERE ([Customer].[France].[Lyon]);",
      schema());
  CHECK(expanded == parse_mdx(kQ1, schema()));

  // Axis order and member order do not matter.
  ParsedQuery reordered = parse_mdx(
      "select [Date].[2011], [Date].[2010] on rows, [Measures].[Sales Amount] on columns "
      "from Sales where ([Customer].[France].[Lyon])",
      schema());
  CHECK(reordered == parse_mdx(kQ2, schema()));

  CHECK(parse_mdx(kQ1, schema()) != parse_mdx(kQ2, schema()));
}

TEST_CASE("keywords are case-insensitive") {
  ParsedQuery q = parse_mdx(
      "sElEcT [Measures].[Sales Amount] oN cOlUmNs fRoM Sales", schema());
  CHECK(q.measures.count("Sales Amount") == 1);
}

TEST_CASE("syntax errors carry character offsets") {
  CHECK(contains(error_of([] { parse_mdx_syntax("PICK [A].[B] ON COLUMNS FROM C"); }),
                 "offset 1: expected SELECT"));
  CHECK(contains(error_of([] { parse_mdx_syntax("SELECT [A].[B ON COLUMNS FROM C"); }),
                 "unterminated '['"));
  CHECK(contains(error_of([] { parse_mdx_syntax("SELECT [].[B] ON COLUMNS FROM C"); }),
                 "offset 8: empty bracketed name"));
  CHECK(contains(error_of([] { parse_mdx_syntax("SELECT [A] ON COLUMNS FROM C"); }),
                 "at least two bracketed segments"));
  CHECK(contains(error_of([] { parse_mdx_syntax("SELECT [A].[B] ON SIDEWAYS FROM C"); }),
                 "expected COLUMNS or ROWS"));
  CHECK(contains(error_of([] { parse_mdx_syntax("SELECT [A].[B] COLUMNS FROM C"); }),
                 "expected ',' or ON"));
  CHECK(contains(error_of([] { parse_mdx_syntax("SELECT [A].[B] ON COLUMNS C"); }),
                 "expected FROM"));
  CHECK(contains(error_of([] { parse_mdx_syntax("SELECT [A].[B] ON COLUMNS FROM [C]"); }),
                 "expected cube name"));
  CHECK(contains(error_of([] { parse_mdx_syntax("SELECT [A].[B] ON COLUMNS FROM C WHERE [D].[E]"); }),
                 "expected '('"));
  CHECK(contains(error_of([] { parse_mdx_syntax("SELECT [A].[B] ON COLUMNS FROM C WHERE ([D].[E]"); }),
                 "expected ')'"));
  CHECK(contains(error_of([] { parse_mdx_syntax("SELECT [A].[B] ON COLUMNS FROM C extra"); }),
                 "expected end of query"));
  CHECK(contains(error_of([] { parse_mdx_syntax("SELECT [A].[B] ON COLUMNS FROM C $"); }),
                 "unexpected character '$'"));
}

TEST_CASE("dictionary errors name the entity") {
  CHECK(contains(error_of([] { parse_mdx("SELECT [Measures].[Sales Amount] ON COLUMNS FROM Stock",
                                         schema()); }),
                 "unknown cube 'Stock'"));
  CHECK(contains(error_of([] { parse_mdx("SELECT [Measures].[Profit] ON COLUMNS FROM Sales",
                                         schema()); }),
                 "unrecognized entity '[Measures].[Profit]'"));
  CHECK(contains(error_of([] {
                   parse_mdx("SELECT [Date].[2010] ON ROWS FROM Sales "
                             "WHERE ([Measures].[Sales Amount])",
                             schema());
                 }),
                 "measure reference '[Measures].[Sales Amount]' not supported in WHERE"));
  CHECK(contains(error_of([] {
                   parse_mdx("SELECT [Date].[2010] ON ROWS FROM Sales WHERE ([Date].[All])",
                             schema());
                 }),
                 "'[Date].[All]' not supported in WHERE"));
  CHECK(contains(error_of([] {
                   parse_mdx("SELECT [Date].[2010] ON ROWS FROM Sales WHERE ([Date].[1999])",
                             schema());
                 }),
                 "unrecognized entity '[Date].[1999]'"));
}

TEST_CASE("canonical rendering round-trips") {
  for (const char* text : {kQ1, kQ2, kQ3}) {
    ParsedQuery q = parse_mdx(text, schema());
    std::string canon = render_canonical(q);
    // Canonical text stays inside the grammar and inside the dictionary.
    CHECK(parse_mdx(canon, schema()) == q);
    // Loading without a schema trusts the canonical tokens.
    CHECK(from_syntax_unchecked(parse_mdx_syntax(canon)) == q);
    // Rendering is a fixed point.
    CHECK(render_canonical(parse_mdx(canon, schema())) == canon);
  }
}

TEST_CASE("canonical rendering sorts and separates axes") {
  ParsedQuery q = parse_mdx(kQ2, schema());
  CHECK(render_canonical(q) ==
        "SELECT [Measures].[Sales Amount] ON COLUMNS, "
        "[Date].[2010], [Date].[2011] ON ROWS "
        "FROM Sales WHERE ([Customer].[France].[Lyon])");

  // No measures: the COLUMNS axis disappears entirely.
  ParsedQuery rows_only = parse_mdx("SELECT [Date].[2010] ON ROWS FROM Sales", schema());
  CHECK(render_canonical(rows_only) == "SELECT [Date].[2010] ON ROWS FROM Sales");

  // No attributes: only COLUMNS remains.
  ParsedQuery cols_only =
      parse_mdx("SELECT [Measures].[Sales Amount] ON COLUMNS FROM Sales", schema());
  CHECK(render_canonical(cols_only) ==
        "SELECT [Measures].[Sales Amount] ON COLUMNS FROM Sales");
}
