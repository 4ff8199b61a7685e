#include "oracles.hpp"

#include "bchroma/operators.hpp"

#include <doctest.h>

#include <set>

using namespace bchroma;

namespace {

std::vector<Graph> small_graphs()
{
    return {star(3), complete(3), path(4), cycle(5), star(1)};
}

} // namespace

TEST_CASE("cartesian product matches the definition")
{
    for (const auto& g : small_graphs()) {
        for (const auto& h : small_graphs()) {
            auto p = cartesian_product(g, h);
            auto nh = h.vertex_count();
            REQUIRE(p.vertex_count() == g.vertex_count() * nh);
            for (Vertex a = 0; a < p.vertex_count(); ++a) {
                for (Vertex b = 0; b < p.vertex_count(); ++b) {
                    auto [u1, v1] = std::pair{a / nh, a % nh};
                    auto [u2, v2] = std::pair{b / nh, b % nh};
                    bool expected = (u1 == u2 && h.adjacent(v1, v2)) || (v1 == v2 && g.adjacent(u1, u2));
                    CHECK(p.adjacent(a, b) == expected);
                }
            }
            auto* d = p.decomposition();
            REQUIRE(d != nullptr);
            CHECK(d->at(1, 0) == nh);
            CHECK(p.label(d->at(1, 0)) == VertexLabel::pair(g.label(1), h.label(0)));
        }
    }
}

TEST_CASE("line graph matches edge incidence")
{
    for (const auto& g : small_graphs()) {
        auto l = line_graph(g);
        REQUIRE(l.vertex_count() == g.edge_count());
        const auto& es = g.edges();
        for (std::size_t i = 0; i < es.size(); ++i) {
            CHECK(edge_index(g, es[i].v, es[i].u) == i);
            for (std::size_t j = 0; j < es.size(); ++j) {
                bool share = i != j && (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u ||
                                        es[i].v == es[j].v);
                CHECK(l.adjacent(i, j) == share);
            }
        }
    }
    CHECK_THROWS(line_graph(complete(1)));
    CHECK_THROWS(edge_index(path(3), 0, 2));
}

TEST_CASE("total graph combines vertices and edges")
{
    for (const auto& g : small_graphs()) {
        auto t = total_graph(g);
        auto n = g.vertex_count();
        REQUIRE(t.vertex_count() == n + g.edge_count());
        const auto& es = g.edges();
        for (Vertex u = 0; u < n; ++u) {
            CHECK(t.label(u) == g.label(u));
            for (Vertex v = 0; v < n; ++v)
                CHECK(t.adjacent(u, v) == g.adjacent(u, v));
            for (std::size_t i = 0; i < es.size(); ++i)
                CHECK(t.adjacent(u, n + i) == (es[i].u == u || es[i].v == u));
        }
        auto l = line_graph(g);
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = 0; j < es.size(); ++j)
                CHECK(t.adjacent(n + i, n + j) == l.adjacent(i, j));
    }
}

TEST_CASE("graph power joins vertices within distance p")
{
    for (const auto& g : {path(6), cycle(7), cartesian_product(star(3), star(2))}) {
        auto d = oracle::distances(g);
        for (std::size_t p = 1; p <= 4; ++p) {
            auto gp = graph_power(g, p);
            for (Vertex u = 0; u < g.vertex_count(); ++u)
                for (Vertex v = 0; v < g.vertex_count(); ++v)
                    CHECK(gp.adjacent(u, v) == (u != v && d[u][v] <= p));
        }
    }
    CHECK_THROWS(graph_power(path(3), 0));
    CHECK(graph_power(path(5), 10).edge_count() == complete(5).edge_count());
}

TEST_CASE("product decomposition exposes inner copies and skeleton")
{
    auto p = cartesian_product(star(4), star(2));
    auto* d = p.decomposition();
    REQUIRE(d != nullptr);
    CHECK(d->inner.vertex_count() == 5);
    CHECK(d->skeleton.vertex_count() == 3);
    for (Vertex v = 0; v < 3; ++v)
        for (Vertex u = 1; u < 5; ++u)
            CHECK(p.adjacent(d->at(0, v), d->at(u, v)));
    CHECK(line_graph(p).decomposition() == nullptr);
}

TEST_CASE("nested total graphs keep labels distinct")
{
    auto g = total_graph(total_graph(path(2)));
    CHECK(g.vertex_count() == 6);
    std::set<VertexLabel> seen(g.labels().begin(), g.labels().end());
    CHECK(seen.size() == g.vertex_count());
    for (const auto& l : g.labels())
        CHECK(VertexLabel::parse(l.to_string()) == l);
    auto three = total_graph(g);
    CHECK(std::set<VertexLabel>(three.labels().begin(), three.labels().end()).size() == three.vertex_count());
}
