#include "bchroma/operators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bchroma {

Graph cartesian_product(const Graph& g, const Graph& h)
{
    if (g.empty() || h.empty())
        throw std::invalid_argument("cartesian product needs non-empty factors");
    const auto nh = h.vertex_count();
    auto index = [nh](Vertex u, Vertex v) { return u * nh + v; };

    GraphBuilder b;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = 0; v < nh; ++v)
            b.add_vertex(VertexLabel::pair(g.label(u), h.label(v)));
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (const auto& e : h.edges())
            b.add_edge(index(u, e.u), index(u, e.v));
    for (const auto& e : g.edges())
        for (Vertex v = 0; v < nh; ++v)
            b.add_edge(index(e.u, v), index(e.v, v));

    auto decomposition = std::make_shared<ProductDecomposition>();
    decomposition->inner = g;
    decomposition->skeleton = h;
    decomposition->inner_copies.resize(nh);
    for (Vertex v = 0; v < nh; ++v)
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            decomposition->inner_copies[v].push_back(index(u, v));
    return std::move(b).build().with_decomposition(std::move(decomposition));
}

std::size_t edge_index(const Graph& g, Vertex u, Vertex v)
{
    if (v < u)
        std::swap(u, v);
    const auto& edges = g.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
    if (it == edges.end() || it->u != u || it->v != v)
        throw std::invalid_argument("not an edge: " + std::to_string(u) + "-" + std::to_string(v));
    return static_cast<std::size_t>(it - edges.begin());
}

namespace {

// Adds the edge-adjacency relation among edge-vertices placed at offset.
void add_edge_adjacency(const Graph& g, GraphBuilder& b, std::size_t offset)
{
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        std::vector<std::size_t> incident;
        for (auto y : g.neighbors(x))
            incident.push_back(edge_index(g, x, y));
        for (std::size_t i = 0; i < incident.size(); ++i)
            for (std::size_t j = i + 1; j < incident.size(); ++j)
                b.add_edge_if_absent(offset + incident[i], offset + incident[j]);
    }
}

} // namespace

Graph line_graph(const Graph& g)
{
    if (g.edge_count() == 0)
        throw std::invalid_argument("line graph of an edgeless graph is empty");
    GraphBuilder b;
    for (const auto& e : g.edges())
        b.add_vertex(VertexLabel::edge_origin(g.label(e.u), g.label(e.v)));
    add_edge_adjacency(g, b, 0);
    return std::move(b).build();
}

Graph total_graph(const Graph& g)
{
    GraphBuilder b;
    std::set<VertexLabel> taken(g.labels().begin(), g.labels().end());
    for (const auto& l : g.labels())
        b.add_vertex(l);
    for (const auto& e : g.edges()) {
        auto l = VertexLabel::edge_origin(g.label(e.u), g.label(e.v));
        // Nested totals can reproduce an existing {a,b}; {x,x} never names a real edge.
        while (taken.count(l))
            l = VertexLabel::edge_origin(l, l);
        taken.insert(l);
        b.add_vertex(l);
    }
    const auto offset = g.vertex_count();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        b.add_edge(e.u, e.v);
        b.add_edge(e.u, offset + i);
        b.add_edge(e.v, offset + i);
    }
    add_edge_adjacency(g, b, offset);
    return std::move(b).build();
}

Graph graph_power(const Graph& g, std::size_t p)
{
    if (p == 0)
        throw std::invalid_argument("graph power needs p >= 1");
    GraphBuilder b;
    for (const auto& l : g.labels())
        b.add_vertex(l);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        auto dist = distances_from(g, u);
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (dist[v] && *dist[v] <= p)
                b.add_edge(u, v);
    }
    return std::move(b).build();
}

} // namespace bchroma
