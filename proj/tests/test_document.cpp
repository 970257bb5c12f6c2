#include <doctest.h>

#include <string>

#include "pencilpairs/document.hpp"

using pp::Cell;
using pp::DocumentKind;
using pp::Int;
using pp::OutputDocument;
using pp::OutputFormat;

namespace {

OutputDocument sample_records() {
    OutputDocument doc;
    doc.kind = DocumentKind::records;
    doc.columns = {"id", "count"};
    doc.rows = {{Cell{std::string("2-32")}, Cell{Int(90)}},
                {Cell{std::string("3-27")}, Cell{Int(88)}}};
    return doc;
}

}  // namespace

TEST_CASE("kind and format names") {
    CHECK(pp::document_kind_name(DocumentKind::table) == "table");
    CHECK(pp::document_kind_name(DocumentKind::records) == "records");
    CHECK(pp::document_kind_name(DocumentKind::report) == "report");
    CHECK(pp::document_kind_from_name("records") == DocumentKind::records);
    CHECK_THROWS_AS(pp::document_kind_from_name("list"), pp::DocumentError);

    CHECK(pp::format_name(OutputFormat::csv) == "csv");
    CHECK(pp::format_from_name("table") == OutputFormat::table);
    CHECK(pp::format_from_name("json") == OutputFormat::json);
    CHECK_THROWS_AS(pp::format_from_name("yaml"), pp::DocumentError);
}

TEST_CASE("document validation") {
    auto doc = sample_records();
    CHECK_NOTHROW(pp::validate_document(doc));
    doc.rows.push_back({Cell{Int(1)}});
    CHECK_THROWS_AS(pp::validate_document(doc), pp::DocumentError);
    CHECK_THROWS_AS(pp::render(doc, OutputFormat::json), pp::DocumentError);
}

TEST_CASE("json rendering is stable and exact") {
    CHECK(pp::render(sample_records(), OutputFormat::json) ==
          "{\"kind\":\"records\",\"columns\":[\"id\",\"count\"],"
          "\"rows\":[[\"2-32\",90],[\"3-27\",88]],\"annotations\":[]}\n");

    OutputDocument empty;
    CHECK(pp::render(empty, OutputFormat::json) ==
          "{\"kind\":\"table\",\"columns\":[],\"rows\":[],\"annotations\":[]}\n");

    OutputDocument tricky;
    tricky.kind = DocumentKind::report;
    tricky.columns = {"text"};
    tricky.rows = {{Cell{std::string("quote \" slash \\ tab \t")}}};
    tricky.annotations = {"line\nbreak", "bell\x07"};
    CHECK(pp::render(tricky, OutputFormat::json) ==
          "{\"kind\":\"report\",\"columns\":[\"text\"],"
          "\"rows\":[[\"quote \\\" slash \\\\ tab \\t\"]],"
          "\"annotations\":[\"line\\nbreak\",\"bell\\u0007\"]}\n");
}

TEST_CASE("json round trip") {
    auto check_round_trip = [](const OutputDocument& doc) {
        std::string text = pp::render(doc, OutputFormat::json);
        CHECK(pp::parse_document(text) == doc);
    };
    check_round_trip(sample_records());
    check_round_trip(OutputDocument{});

    OutputDocument big;
    big.kind = DocumentKind::table;
    big.columns = {"n", "label"};
    big.rows = {{Cell{Int("123456789012345678901234567890")}, Cell{std::string("big")}},
                {Cell{Int("-987654321098765432109876543210")}, Cell{std::string("negative")}},
                {Cell{Int(0)}, Cell{std::string("")}}};
    big.annotations = {"exact integers survive", "second note"};
    check_round_trip(big);

    OutputDocument awkward;
    awkward.kind = DocumentKind::report;
    awkward.columns = {"a,b", "c\"d"};
    awkward.rows = {{Cell{std::string("comma, quote \" and\nnewline")}, Cell{Int(-7)}}};
    check_round_trip(awkward);
}

TEST_CASE("document parsing accepts field reordering") {
    auto doc = pp::parse_document(
        R"({"annotations":[],"rows":[[1]],"columns":["n"],"kind":"table"})");
    CHECK(doc.kind == DocumentKind::table);
    CHECK(doc.rows == std::vector<std::vector<Cell>>{{Cell{Int(1)}}});
}

TEST_CASE("document parsing rejections") {
    auto reject = [](const std::string& text) {
        CHECK_THROWS_AS(pp::parse_document(text), pp::DocumentError);
    };
    reject("");
    reject("{");
    reject("[]");
    reject("42");
    reject(R"({"kind":"table","columns":[],"rows":[],"annotations":[]} trailing)");
    reject(R"({"kind":"table","columns":[],"rows":[]})");
    reject(R"({"kind":"table","columns":[],"rows":[],"annotations":[],"extra":[]})");
    reject(R"({"kind":"table","kind":"table","columns":[],"rows":[],"annotations":[]})");
    reject(R"({"kind":"list","columns":[],"rows":[],"annotations":[]})");
    reject(R"({"kind":7,"columns":[],"rows":[],"annotations":[]})");
    reject(R"({"kind":"table","columns":[1],"rows":[],"annotations":[]})");
    reject(R"({"kind":"table","columns":"id","rows":[],"annotations":[]})");
    reject(R"({"kind":"table","columns":[],"rows":[7],"annotations":[]})");
    reject(R"({"kind":"table","columns":["n"],"rows":[[1.5]],"annotations":[]})");
    reject(R"({"kind":"table","columns":["n"],"rows":[[1e3]],"annotations":[]})");
    reject(R"({"kind":"table","columns":["n"],"rows":[[true]],"annotations":[]})");
    reject(R"({"kind":"table","columns":["n"],"rows":[[null]],"annotations":[]})");
    reject(R"({"kind":"table","columns":["n"],"rows":[[[1]]],"annotations":[]})");
    reject(R"({"kind":"table","columns":["n"],"rows":[[{"x":1}]],"annotations":[]})");
    reject(R"({"kind":"table","columns":["n"],"rows":[[1,2]],"annotations":[]})");
    reject(R"({"kind":"table","columns":[],"rows":[],"annotations":[9]})");
}

TEST_CASE("huge integers parse exactly") {
    auto doc = pp::parse_document(
        R"({"kind":"table","columns":["n"],)"
        R"("rows":[[123456789012345678901234567890123456789]],"annotations":[]})");
    REQUIRE(doc.rows.size() == 1);
    CHECK(std::get<Int>(doc.rows[0][0]) == Int("123456789012345678901234567890123456789"));

    auto negative = pp::parse_document(
        R"({"kind":"table","columns":["n"],)"
        R"("rows":[[-123456789012345678901234567890]],"annotations":[]})");
    CHECK(std::get<Int>(negative.rows[0][0]) == Int("-123456789012345678901234567890"));

    // 64-bit boundary values take the fast integer paths
    auto bounds = pp::parse_document(
        R"({"kind":"table","columns":["a","b"],)"
        R"("rows":[[9223372036854775807,-9223372036854775808],)"
        R"([18446744073709551615,0]],"annotations":[]})");
    CHECK(std::get<Int>(bounds.rows[0][0]) == Int("9223372036854775807"));
    CHECK(std::get<Int>(bounds.rows[0][1]) == Int("-9223372036854775808"));
    CHECK(std::get<Int>(bounds.rows[1][0]) == Int("18446744073709551615"));
}

TEST_CASE("csv rendering") {
    CHECK(pp::render(sample_records(), OutputFormat::csv) ==
          "id,count\n2-32,90\n3-27,88\n");

    OutputDocument quoting;
    quoting.columns = {"plain", "with,comma", "with\"quote"};
    quoting.rows = {{Cell{std::string("a,b")}, Cell{std::string("say \"hi\"")},
                     Cell{std::string("line\nbreak")}},
                    {Cell{Int(-5)}, Cell{std::string("")}, Cell{std::string("ok")}}};
    quoting.annotations = {"csv drops annotations"};
    CHECK(pp::render(quoting, OutputFormat::csv) ==
          "plain,\"with,comma\",\"with\"\"quote\"\n"
          "\"a,b\",\"say \"\"hi\"\"\",\"line\nbreak\"\n"
          "-5,,ok\n");

    OutputDocument headers_only;
    headers_only.columns = {"x"};
    CHECK(pp::render(headers_only, OutputFormat::csv) == "x\n");
}

TEST_CASE("table rendering") {
    CHECK(pp::render(sample_records(), OutputFormat::table) ==
          "id    count\n"
          "----  -----\n"
          "2-32     90\n"
          "3-27     88\n");

    OutputDocument mixed;
    mixed.kind = DocumentKind::report;
    mixed.columns = {"name", "n"};
    mixed.rows = {{Cell{std::string("alpha")}, Cell{Int(7)}},
                  {Cell{std::string("x")}, Cell{std::string("not checkable")}}};
    mixed.annotations = {"first note", "second note"};
    CHECK(pp::render(mixed, OutputFormat::table) ==
          "name   n\n"
          "-----  -------------\n"
          "alpha              7\n"
          "x      not checkable\n"
          "\n"
          "first note\n"
          "second note\n");

    OutputDocument notes_only;
    notes_only.kind = DocumentKind::report;
    notes_only.annotations = {"just a note"};
    CHECK(pp::render(notes_only, OutputFormat::table) == "just a note\n");
}
