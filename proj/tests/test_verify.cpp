#include "bchroma/verify.hpp"

#include <doctest.h>

using namespace bchroma;

TEST_CASE("ranges parse")
{
    auto r = Range::parse("2..5");
    CHECK(r.lo == 2);
    CHECK(r.hi == 5);
    CHECK(Range::parse("3").lo == 3);
    CHECK_THROWS(Range::parse("a..3"));
    CHECK_THROWS(Range::parse("5..2"));
    CHECK_THROWS(Range::parse("-1"));
}

TEST_CASE("star product suite agrees everywhere")
{
    VerifyOptions o;
    o.n = {2, 4};
    o.m = {2, 4};
    auto report = run_verify("thm3.1", o);
    CHECK(report.rows.size() == 9);
    CHECK(report.mismatches() == 0);
    for (const auto& row : report.rows) {
        CHECK(row.agreement == "match");
        CHECK(row.construction_valid == true);
    }
    auto j = to_json(report);
    CHECK(j["suite"] == "thm3.1");
    CHECK(j["rows"].size() == 9);
    CHECK(to_text(report).find("0 mismatches") != std::string::npos);
}

TEST_CASE("m-degree suite and rook suite")
{
    VerifyOptions o;
    o.n = {3, 4};
    o.m = {3, 4};
    CHECK(run_verify("lemma-mdegree", o).mismatches() == 0);

    VerifyOptions rook;
    rook.n = {3, 4};
    auto r = run_verify("thm4.4", rook);
    CHECK(r.mismatches() == 0);
    CHECK(r.rows.size() == 4);
}

TEST_CASE("square suite flags the n=5, m=3 counterexample")
{
    VerifyOptions o;
    o.n = {5, 5};
    o.m = {3, 3};
    o.budget.max_seconds = 120;
    auto r = run_verify("thm4.2", o);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].agreement == "MISMATCH");
    CHECK(r.rows[0].solver == 10);
}

TEST_CASE("budget-limited rows are reported as unverified")
{
    VerifyOptions o;
    o.n = {4, 4};
    o.m = {3, 3};
    o.budget.max_nodes = 10;
    auto r = run_verify("thm3.3", o);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].solver_status == "budget-exceeded");
    CHECK(r.rows[0].agreement == "unverified");
    CHECK(r.rows[0].construction_valid == true);
}

TEST_CASE("unknown suites are rejected")
{
    CHECK_THROWS_AS(run_verify("thm9.9", {}), std::invalid_argument);
    CHECK(verify_suites().size() == 9);
}
