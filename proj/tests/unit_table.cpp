#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>

#include "qdvol/table.hpp"

using namespace qdvol;

static std::string table_path() {
    if (const char* d = std::getenv("QDVOL_DATA"))
        return std::string(d) + "/appendix_b.csv";
    return "data/appendix_b.csv";
}

TEST_CASE("shipped table loads and every row round-trips bit-identically") {
    auto rows = load_table(table_path());
    CHECK(rows.size() == 422);

    std::ifstream in(table_path());
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);  // header
    size_t i = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        REQUIRE(i < rows.size());
        CHECK(serialize_table_row(rows[i]) == line);
        CHECK(serialize_table_row(parse_table_row(line)) == line);
        ++i;
    }
    CHECK(i == rows.size());

    // First and last rows of the printed table.
    CHECK(serialize_table_row(rows.front()) == "2,0,-1^4,2,1,2");
    CHECK(serialize_table_row(rows.back()) == "11,6,20,34148209117,14467005000,10");
}

TEST_CASE("structurally inconsistent rows are rejected at parse") {
    // Reference row is fine.
    CHECK_NOTHROW(parse_table_row("4,2,5 -1,28,135,4"));
    // pi_power != 2*g_eff
    CHECK_THROWS(parse_table_row("4,2,5 -1,28,135,6"));
    // wrong dim
    CHECK_THROWS(parse_table_row("5,2,5 -1,28,135,4"));
    // wrong genus
    CHECK_THROWS(parse_table_row("4,1,5 -1,28,135,4"));
    // unreduced coefficient breaks round-tripping
    CHECK_THROWS(parse_table_row("4,2,5 -1,56,270,4"));
    // invalid stratum (sum of orders not 0 mod 4)
    CHECK_THROWS(parse_table_row("3,1,3 -1,1,1,4"));
    // malformed fields
    CHECK_THROWS(parse_table_row("4,2,5 -1,28,135"));
    CHECK_THROWS(parse_table_row("x,2,5 -1,28,135,4"));
}

TEST_CASE("duplicate strata with differing values are reported as conflicts") {
    auto rows = load_table(table_path());
    std::map<std::string, int> count;
    for (const auto& r : rows) ++count[format_signature(r.stratum)];

    std::vector<std::string> dups;
    for (const auto& [k, n] : count)
        if (n > 1) dups.push_back(k);
    std::sort(dups.begin(), dups.end());
    CHECK(dups == std::vector<std::string>{"4,1^2,-1^6", "4,3,-1^7"});

    // Weight cap 0 skips all computation; the conflicts are structural.
    auto report = verify_table(rows, 0);
    CHECK(report.conflict == 4);
    CHECK(report.fail == 0);
    CHECK(report.pass + report.skip + report.conflict == (int)rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        std::string key = format_signature(rows[i].stratum);
        if (key == "4,1^2,-1^6" || key == "4,3,-1^7")
            CHECK(report.rows[i].status == "CONFLICT");
    }
}

TEST_CASE("verification of small-weight rows against the pipeline") {
    std::vector<TableRow> rows = {
        parse_table_row("2,0,-1^4,2,1,2"),
        parse_table_row("3,1,2 -1^2,4,3,2"),
        parse_table_row("4,2,5 -1,28,135,4"),
        parse_table_row("4,2,2^2,2,3,2"),
        // Genus-0 rows beyond the weight cap still verify via the sphere
        // closed form.
        parse_table_row("11,0,8 -1^12,512,315,10"),
        parse_table_row("11,0,2 1^3 -1^9,1,3,10"),
        // Genus > 0 beyond the cap has no closed form: SKIP.
        parse_table_row("11,6,20,34148209117,14467005000,10"),
    };
    auto report = verify_table(rows, 6);
    CHECK(report.pass == 6);
    CHECK(report.skip == 1);
    CHECK(report.fail == 0);
    CHECK(report.conflict == 0);
    CHECK(report.rows[2].status == "PASS");
    CHECK(report.rows[2].computed == "28/135 * pi^4");
    CHECK(report.rows[4].detail == "genus0");
    CHECK(report.rows[6].status == "SKIP");

    // A wrong value is a FAIL, with the computed value recorded.
    rows[2].coefficient = Rational(1, 5);
    auto bad = verify_table(rows, 6);
    CHECK(bad.rows[2].status == "FAIL");
    CHECK(bad.rows[2].computed == "28/135 * pi^4");
    CHECK(!bad.ok());
}

TEST_CASE("verify report is independent of row order") {
    std::vector<TableRow> rows = {
        parse_table_row("2,0,-1^4,2,1,2"),
        parse_table_row("3,1,2 -1^2,4,3,2"),
        parse_table_row("4,1,1^2 -1^2,1,3,4"),
        parse_table_row("4,1,3 -1^3,5,9,4"),
    };
    auto a = verify_table(rows, 4);
    std::reverse(rows.begin(), rows.end());
    auto b = verify_table(rows, 4);
    CHECK(a.pass == b.pass);
    CHECK(a.fail == b.fail);
    for (size_t i = 0; i < rows.size(); ++i)
        CHECK(a.rows[i].status == b.rows[rows.size() - 1 - i].status);
}
