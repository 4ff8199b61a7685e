#pragma once

#include "bchroma/graph.hpp"

namespace bchroma {

/// G□H with G as the inner graph and H as the skeleton. Vertex (u)_v has
/// index u*|V(H)| + v and label (label_G(u), label_H(v)); the result carries
/// a ProductDecomposition.
Graph cartesian_product(const Graph& g, const Graph& h);

/// One vertex per edge of g, in sorted edge order, labelled by the edge's
/// endpoint labels. Throws std::invalid_argument on an edgeless graph.
Graph line_graph(const Graph& g);

/// Original vertices first (same order and labels), then one vertex per edge
/// in sorted edge order.
Graph total_graph(const Graph& g);

/// Same vertices; u~v iff 1 <= d(u,v) <= p. Throws on p == 0.
Graph graph_power(const Graph& g, std::size_t p);

/// Index of the vertex for edge {u,v} inside line_graph(g) (add g.vertex_count()
/// for total_graph(g)). Throws if {u,v} is not an edge.
std::size_t edge_index(const Graph& g, Vertex u, Vertex v);

} // namespace bchroma
