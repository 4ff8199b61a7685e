#pragma once

#include "bchroma/bitset.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bchroma {

using Vertex = std::size_t;

/// Provenance of a vertex through operator composition.
///
/// Generators emit Plain labels. The Cartesian product labels (u, v) pairs and
/// the line/total graph operators label edge-vertices with the labels of the
/// edge's endpoints, stored in sorted order.
class VertexLabel {
public:
    enum class Kind : unsigned char { Plain, Pair, EdgeOrigin };

    static VertexLabel plain(std::size_t index);
    static VertexLabel pair(VertexLabel left, VertexLabel right);
    static VertexLabel edge_origin(VertexLabel u, VertexLabel v);

    /// Parses the textual form produced by to_string(): `3`, `(a,b)` or `{a,b}`.
    static VertexLabel parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    std::size_t index() const noexcept { return index_; }
    const VertexLabel& first() const { return parts_.at(0); }
    const VertexLabel& second() const { return parts_.at(1); }

    std::string to_string() const;

    std::strong_ordering operator<=>(const VertexLabel& other) const;
    bool operator==(const VertexLabel& other) const { return (*this <=> other) == 0; }

private:
    VertexLabel() = default;

    Kind kind_ = Kind::Plain;
    std::size_t index_ = 0;
    std::vector<VertexLabel> parts_;
};

struct Edge {
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge&) const = default;
};

struct ProductDecomposition;

/// Immutable simple undirected graph.
///
/// Adjacency is held twice: as bitset rows for set operations and as sorted
/// neighbour lists / a sorted edge list for iteration. Both views always agree.
/// Instances are built through GraphBuilder and never change afterwards.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    const VertexLabel& label(Vertex v) const { return labels_.at(v); }
    const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
    std::optional<Vertex> find(const VertexLabel& label) const;

    bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).test(v); }
    const Bitset& row(Vertex v) const { return rows_.at(v); }
    std::span<const Vertex> neighbors(Vertex v) const { return neighbors_.at(v); }
    std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }

    /// Edges with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Present only on graphs produced by cartesian_product().
    const ProductDecomposition* decomposition() const noexcept { return decomposition_.get(); }

    /// Copy of this graph with a product decomposition attached.
    Graph with_decomposition(std::shared_ptr<const ProductDecomposition> decomposition) const;

private:
    friend class GraphBuilder;

    std::vector<VertexLabel> labels_;
    std::vector<Bitset> rows_;
    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<Edge> edges_;
    std::shared_ptr<const ProductDecomposition> decomposition_;
};

/// Inner-graph / skeleton view of G□H: the copies (G)_v indexed by v in V(H).
struct ProductDecomposition {
    Graph inner;
    Graph skeleton;
    /// inner_copies[v][u] is the product vertex (u)_v.
    std::vector<std::vector<Vertex>> inner_copies;

    Vertex at(Vertex inner_vertex, Vertex skeleton_vertex) const
    {
        return inner_copies.at(skeleton_vertex).at(inner_vertex);
    }
};

/// Mutable staging area for a Graph. Rejects loops, parallel edges and
/// duplicate labels.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(std::size_t plain_vertices);

    Vertex add_vertex(VertexLabel label);
    void add_edge(Vertex u, Vertex v);
    /// Adds the edge unless already present; loops are still rejected.
    void add_edge_if_absent(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;
    std::size_t vertex_count() const noexcept { return labels_.size(); }

    Graph build() &&;

private:
    std::vector<VertexLabel> labels_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// Generators. Vertex 0 is the centre / first vertex in every family.

Graph star(std::size_t leaves);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);

struct DegreeProfile {
    /// Non-increasing.
    std::vector<std::size_t> degrees;
    /// vertex_order[i] is the vertex holding degrees[i]; ties broken by index.
    std::vector<Vertex> vertex_order;
};

DegreeProfile degree_profile(const Graph& g);

/// BFS distance, or nullopt when v is unreachable from u.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);

/// Distances from source to every vertex; unreachable vertices hold nullopt.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

/// Longest shortest-path length. Throws std::invalid_argument on a
/// disconnected or empty graph.
std::size_t diameter(const Graph& g);

} // namespace bchroma
