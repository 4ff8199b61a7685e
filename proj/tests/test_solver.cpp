#include "oracles.hpp"

#include "bchroma/operators.hpp"
#include "bchroma/solver.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace bchroma;

namespace {

std::vector<Graph> zoo()
{
    return {star(3),
            complete(4),
            path(5),
            cycle(5),
            cycle(6),
            cartesian_product(path(2), path(3)),
            cartesian_product(star(2), path(2)),
            line_graph(star(4)),
            total_graph(path(3)),
            graph_power(path(6), 2)};
}

// Assignments whose used colors, renumbered, form a b-coloring.
std::uint64_t naive_within(const Graph& g, unsigned k)
{
    auto a = oracle::matrix_of(g);
    std::uint64_t count = 0;
    oracle::for_each_assignment(a.size(), k, [&](const auto& colors) {
        std::map<unsigned, unsigned> rank;
        for (auto c : colors)
            rank.emplace(c, 0);
        unsigned next = 0;
        for (auto& [c, r] : rank)
            r = ++next;
        std::vector<unsigned> renumbered;
        for (auto c : colors)
            renumbered.push_back(rank[c]);
        count += oracle::is_b_coloring(a, renumbered, next);
        return true;
    });
    return count;
}

} // namespace

TEST_CASE("has_b_coloring agrees with exhaustive enumeration")
{
    for (const auto& g : zoo()) {
        for (Color k = 1; k <= 4; ++k) {
            auto cert = has_b_coloring(g, k);
            CHECK(cert.has_value() == oracle::has_b_coloring(g, k));
            if (cert)
                CHECK(validate_certificate(g, *cert));
        }
    }
}

TEST_CASE("b-chromatic number agrees with exhaustive enumeration")
{
    for (const auto& g : {star(3), path(5), cycle(5), cartesian_product(path(2), path(3)), graph_power(path(5), 2)}) {
        auto r = b_chromatic_number(g);
        CHECK(r.phi == oracle::phi(g));
        CHECK(validate_certificate(g, r.witness));
        CHECK(r.per_k_outcomes.at(r.phi) == KOutcome::Found);
        for (auto k = r.phi + 1; k <= m_degree(g); ++k)
            CHECK(r.per_k_outcomes.at(k) == KOutcome::Exhausted);
    }
}

TEST_CASE("k above the m-degree is rejected without search")
{
    auto g = path(6);
    SearchStats stats;
    CHECK_FALSE(has_b_coloring(g, static_cast<Color>(m_degree(g) + 1), {}, &stats).has_value());
    CHECK(stats.nodes == 0);
}

TEST_CASE("counting agrees with exhaustive enumeration")
{
    for (const auto& g : zoo()) {
        if (g.vertex_count() > 8)
            continue;
        for (Color k = 1; k <= 4; ++k) {
            auto r = count_b_colorings(g, k);
            CHECK(r.count == oracle::count_b_colorings(g, k));
            CHECK(count_b_colorings_within_palette(g, k).count == naive_within(g, k));
        }
    }
}

TEST_CASE("count report fields")
{
    auto r = count_b_colorings(complete(3), 3);
    CHECK(r.count == 6);
    CHECK(r.total_assignments == 27);
    CHECK(r.probability_percent(2) == "22.22");
    CHECK(to_string(r.mode) == "exact-palette");
}

TEST_CASE("clique and chromatic numbers agree with brute force")
{
    for (const auto& g : zoo()) {
        CHECK(clique_number(g) == oracle::clique_number(g));
        CHECK(chromatic_number(g) == oracle::chromatic_number(g));
        auto c = find_proper_coloring(g, static_cast<Color>(chromatic_number(g)));
        REQUIRE(c.has_value());
        CHECK(is_proper(g, *c));
    }
    CHECK_FALSE(find_proper_coloring(complete(4), 3).has_value());
}

TEST_CASE("budget exhaustion carries partial results")
{
    Budget tiny;
    tiny.max_nodes = 5;
    auto g = cartesian_product(complete(4), complete(3));
    try {
        (void)b_chromatic_number(g, tiny);
        FAIL("expected the budget to run out");
    } catch (const SearchBudgetExceeded& e) {
        CHECK(e.nodes() >= 5);
        bool saw = false;
        for (const auto& [k, o] : e.per_k_outcomes())
            saw |= o == KOutcome::BudgetExceeded;
        CHECK(saw);
    }
    try {
        (void)count_b_colorings(g, 5, tiny);
        FAIL("expected the budget to run out");
    } catch (const CountBudgetExceeded& e) {
        CHECK(e.nodes() >= 5);
    }
    Budget few;
    few.max_assignments = 10;
    CHECK_THROWS_AS((void)count_b_colorings(g, 3, few), BudgetExceeded);
}

TEST_CASE("results do not depend on the number of workers")
{
    auto g = cartesian_product(star(3), star(2));
    Budget one, four;
    four.workers = 4;
    auto a = b_chromatic_number(g, one);
    auto b = b_chromatic_number(g, four);
    CHECK(a.phi == b.phi);
    CHECK(a.witness == b.witness);
    auto k = cartesian_product(complete(3), complete(3));
    CHECK(count_b_colorings(k, 3, one).count == count_b_colorings(k, 3, four).count);
}
