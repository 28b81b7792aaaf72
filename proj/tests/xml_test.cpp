#include "olap/xml.hpp"

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

const char* kSessionLog =
    "-- session: SalesManager1\n"
    "SELECT [Measures].[Sales Amount] ON COLUMNS, [Date].[2010], [Date].[2011] ON ROWS\n"
    "FROM Sales\n"
    "WHERE ([Customer].[France].[Lyon]);\n";

RawLog raw_log() { return segment_log(kSessionLog); }

TaggedLog tagged_log() {
  static SchemaDef schema = parse_schema(kSchemaText);
  return recognize_entities(raw_log(), schema);
}

}  // namespace

TEST_CASE("segment_queries splits statements into ordered items") {
  SegmentedDoc doc = segment_queries(raw_log());
  REQUIRE(doc.sessions.size() == 1);
  CHECK(doc.sessions[0].id == "SalesManager1");
  REQUIRE(doc.sessions[0].queries.size() == 1);
  const SegmentedQuery& q = doc.sessions[0].queries[0];
  REQUIRE(q.items.size() == 5);
  CHECK(q.items[0] == SegmentedItem{SegmentKind::columns, "Sales Amount"});
  CHECK(q.items[1] == SegmentedItem{SegmentKind::rows, "2010"});
  CHECK(q.items[2] == SegmentedItem{SegmentKind::rows, "2011"});
  CHECK(q.items[3] == SegmentedItem{SegmentKind::cube, "Sales"});
  CHECK(q.items[4] == SegmentedItem{SegmentKind::condition, "[Customer].[France].[Lyon]"});
}

TEST_CASE("segmented XML carries per-kind 1-based ids") {
  std::string xml = emit_segmented_xml(raw_log());
  CHECK(contains(xml, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>"));
  CHECK(contains(xml, "<Log session=\"SalesManager1\">"));
  CHECK(contains(xml, "<Query id=\"1\">"));
  CHECK(contains(xml, "<Columns id=\"1\">Sales Amount</Columns>"));
  CHECK(contains(xml, "<Rows id=\"1\">2010</Rows>"));
  CHECK(contains(xml, "<Rows id=\"2\">2011</Rows>"));
  CHECK(contains(xml, "<Cube id=\"1\">Sales</Cube>"));
  CHECK(contains(xml, "<Condition id=\"1\">[Customer].[France].[Lyon]</Condition>"));
}

TEST_CASE("segmented XML round-trips") {
  SegmentedDoc doc = segment_queries(raw_log());
  std::string xml = render_segmented_xml(doc);
  CHECK(parse_segmented_xml(xml) == doc);
  // Emission is stable across the round-trip.
  CHECK(render_segmented_xml(parse_segmented_xml(xml)) == xml);
}

TEST_CASE("tagged XML lists entities by kind") {
  std::string xml = emit_tagged_xml(tagged_log());
  CHECK(contains(xml, "<TaggedLog>"));
  CHECK(contains(xml, "<Measure id=\"1\">Sales Amount</Measure>"));
  CHECK(contains(xml, "<Dimension id=\"1\">Date"));
  CHECK(contains(xml, "<Member id=\"1\">2010</Member>"));
  CHECK(contains(xml, "<Member id=\"2\">2011</Member>"));
  CHECK(contains(xml, "<Cube id=\"1\">Sales</Cube>"));
  CHECK(contains(xml, "<Condition id=\"1\">[Customer].[France].[Lyon]</Condition>"));
  // The slicer's dimension block follows the condition and tags each level.
  CHECK(contains(xml, "<Dimension id=\"2\">Customer"));
  CHECK(contains(xml, "<Member id=\"1\">France</Member>"));
  CHECK(contains(xml, "<Member id=\"2\">Lyon</Member>"));
}

TEST_CASE("tagged XML round-trips") {
  TaggedLog tagged = tagged_log();
  std::string xml = emit_tagged_xml(tagged);
  CHECK(parse_tagged_xml(xml) == tagged);
  CHECK(emit_tagged_xml(parse_tagged_xml(xml)) == xml);
}

TEST_CASE("round-trips cover measure-only and slicer-free queries") {
  SchemaDef schema = parse_schema(kSchemaText);
  RawLog raw = segment_log(
      "-- session: S\n"
      "SELECT [Measures].[Sales Amount] ON COLUMNS FROM Sales;\n"
      "SELECT [Product].[Astradol] ON ROWS FROM Sales;\n"
      "SELECT [Date].[2010] ON ROWS FROM Sales "
      "WHERE ([Customer].[Tunisia].[Tunis], [Product].[Astradol]);\n");
  SegmentedDoc doc = segment_queries(raw);
  CHECK(parse_segmented_xml(render_segmented_xml(doc)) == doc);
  TaggedLog tagged = recognize_entities(raw, schema);
  CHECK(parse_tagged_xml(emit_tagged_xml(tagged)) == tagged);
}

TEST_CASE("special characters survive escaping") {
  RawLog raw;
  raw.sessions.push_back(
      RawSession{"a&b<c>\"d'", {"SELECT [M&Ms].[a<b] ON ROWS FROM Cube1"}});
  std::string xml = emit_segmented_xml(raw);
  CHECK(contains(xml, "session=\"a&amp;b&lt;c&gt;&quot;d&apos;\""));
  CHECK(contains(xml, "<Rows id=\"1\">a&lt;b</Rows>"));
  SegmentedDoc doc = parse_segmented_xml(xml);
  CHECK(doc.sessions[0].id == "a&b<c>\"d'");
  CHECK(doc.sessions[0].queries[0].items[0].text == "a<b");
}

TEST_CASE("segment_queries reports the failing statement") {
  RawLog raw;
  raw.sessions.push_back(RawSession{"S1", {"SELECT [A].[B] ON ROWS FROM C", "NOT MDX"}});
  std::string msg = error_of([&] { segment_queries(raw); });
  CHECK(contains(msg, "session 'S1' query 2:"));
  CHECK(contains(msg, "expected SELECT"));
}

TEST_CASE("malformed XML is rejected with offsets") {
  CHECK(contains(error_of([] { parse_segmented_xml("<OlapLog>"); }),
                 "unterminated element 'OlapLog'"));
  CHECK(contains(error_of([] { parse_segmented_xml("<OlapLog></Wrong>"); }),
                 "mismatched close tag 'Wrong' for 'OlapLog'"));
  CHECK(contains(error_of([] { parse_segmented_xml("<Other></Other>"); }),
                 "expected <OlapLog> document root"));
  CHECK(contains(error_of([] { parse_segmented_xml("<OlapLog></OlapLog>junk"); }),
                 "content after document root"));
  CHECK(contains(error_of([] { parse_segmented_xml("<OlapLog>&bogus;</OlapLog>"); }),
                 "unknown entity '&bogus;'"));
}

TEST_CASE("id sequences are validated") {
  const char* bad_query_id =
      "<OlapLog><Log session=\"S\"><Query id=\"2\"><Cube id=\"1\">C</Cube></Query></Log></OlapLog>";
  CHECK(contains(error_of([&] { parse_segmented_xml(bad_query_id); }),
                 "<Query> id \"2\" out of sequence (expected 1)"));

  const char* bad_item_id =
      "<OlapLog><Log session=\"S\"><Query id=\"1\">"
      "<Rows id=\"1\">x</Rows><Rows id=\"3\">y</Rows>"
      "</Query></Log></OlapLog>";
  CHECK(contains(error_of([&] { parse_segmented_xml(bad_item_id); }),
                 "<Rows> id \"3\" out of sequence (expected 2)"));

  const char* missing_id =
      "<OlapLog><Log session=\"S\"><Query><Cube id=\"1\">C</Cube></Query></Log></OlapLog>";
  CHECK(contains(error_of([&] { parse_segmented_xml(missing_id); }),
                 "<Query> missing id attribute"));
}

TEST_CASE("tagged parse validates slicer tagging against conditions") {
  TaggedLog tagged = tagged_log();
  std::string xml = emit_tagged_xml(tagged);

  // Dropping the slicer's dimension block leaves the condition untagged.
  std::string no_block = xml;
  std::size_t start = no_block.find("    <Dimension id=\"2\">Customer");
  REQUIRE(start != std::string::npos);
  std::size_t stop = no_block.find("</Dimension>", start);
  REQUIRE(stop != std::string::npos);
  no_block.erase(start, stop + 13 - start);
  CHECK(contains(error_of([&] { parse_tagged_xml(no_block); }),
                 "missing slicer <Dimension> tagging"));

  // A level that disagrees with the condition is a consistency error.
  std::string bad_level = xml;
  std::size_t lyon = bad_level.rfind("<Member id=\"2\">Lyon</Member>");
  REQUIRE(lyon != std::string::npos);
  bad_level.replace(lyon, 28, "<Member id=\"2\">Nice</Member>");
  CHECK(contains(error_of([&] { parse_tagged_xml(bad_level); }),
                 "does not match condition level 'Lyon'"));
}
