#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <skk/report.hpp>
#include <skk/tables.hpp>
#include <skk/verify.hpp>

#include <sstream>

using namespace skk;

namespace {

const CatalogBundle& catalog() {
    static CatalogBundle cat = load_catalog();
    return cat;
}

}  // namespace

TEST_CASE("machine table format is tagged, line based, and deterministic") {
    auto t = make_table(catalog(), "physics");
    std::string a = render_machine(t);
    std::string b = render_machine(make_table(catalog(), "physics"));
    CHECK(a == b);
    std::istringstream is(a);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "table physics 1");
    REQUIRE(std::getline(is, line));
    CHECK(line.rfind("columns structure | S1 | S3 | S5", 0) == 0);
    int rows = 0;
    while (std::getline(is, line)) {
        CHECK(line.rfind("row ", 0) == 0);
        ++rows;
    }
    CHECK(rows == 12);
}

TEST_CASE("human table format aligns columns") {
    auto t = make_table(catalog(), "pin-parity");
    std::string h = render_human(t);
    std::istringstream is(h);
    std::string header, rule;
    REQUIRE(std::getline(is, header));
    REQUIRE(std::getline(is, rule));
    CHECK(rule.find_first_not_of('-') == std::string::npos);
    CHECK(header.find("pin-") != std::string::npos);
    CHECK(t.rows.size() == 9);  // even dimensions 2..18
    CHECK_THROWS_AS(make_table(catalog(), "nosuch"), std::invalid_argument);
}

TEST_CASE("table presets contain the expected flagship cells") {
    auto physics = render_machine(make_table(catalog(), "physics"));
    CHECK(physics.find("row pin- | 0 | Z/2 | 0 | Z/2 | C* x Z/4 (non-split) | Z/2 | C* | 0") !=
          std::string::npos);
    CHECK(physics.find("row spin | Z/2 | Z/2 | Z/2 | Z/2 x Z/2 | C* x Z/2 | Z/2 | C*^2 | Z/2") !=
          std::string::npos);
    auto parity = render_machine(make_table(catalog(), "pin-parity"));
    CHECK(parity.find("row 18 | Z(RP^{2m}) | 2Z | 2Z | Z(RP^{8m+2}) | ?") != std::string::npos);
    auto odd = render_machine(make_table(catalog(), "skk-odd"));
    CHECK(odd.find("row pin+ | 1 | Z/2 | Z/2 | split:bounding-parity") != std::string::npos);
    CHECK(odd.find("row pin+ | 9 | Z/2 | ? | unknown") != std::string::npos);
    CHECK(odd.find("row or4 | 31 | ? | ? | unknown") != std::string::npos);
}

TEST_CASE("verdict renderings") {
    auto v = skk_group(catalog(), "pin-", 2);
    std::string m = render_verdict_machine(v);
    CHECK(m.rfind("verdict pin- 2 1\nsphere Z\ngroup Z x Z/4\nsplit non-split\n", 0) == 0);
    CHECK(m.find("rule rule:fiber-product") != std::string::npos);
    std::string h = render_verdict_human(v);
    CHECK(h.find("Z x Z/4") != std::string::npos);
    CHECK(h.find("derivation:") != std::string::npos);
}

TEST_CASE("itqft renderings") {
    auto c = classify(catalog(), "pin-", 2);
    std::string m = render_itqft_machine(c);
    CHECK(m == "itqft pin- 2 1\nfull C* x Z/4\nunitary Z/8 x R_>0\nquotient C*\nsplit non-split\n");
    auto open = classify(catalog(), "pin+", 9);
    CHECK(render_itqft_machine(open).find("full ?") != std::string::npos);
    CHECK(render_itqft_human(c).find("does not split") != std::string::npos);
}

TEST_CASE("verification suites pass on the shipped data") {
    for (const char* suite : {"homology", "charclass", "skk", "itqft"}) {
        CAPTURE(suite);
        auto results = verify_suite(suite);
        CHECK(!results.empty());
        for (const auto& r : results) {
            CAPTURE(r.name);
            CHECK(r.pass);
        }
    }
    CHECK_THROWS_AS(verify_suite("nosuch"), std::invalid_argument);
}

TEST_CASE("golden diffs detect drift") {
    // verify_skk against a directory with no goldens reports a failure rather
    // than passing vacuously
    auto results = verify_skk();
    bool found_golden = false;
    for (const auto& r : results)
        if (r.name.rfind("skk/golden/", 0) == 0) {
            found_golden = true;
            CHECK(r.pass);
        }
    CHECK(found_golden);
}
