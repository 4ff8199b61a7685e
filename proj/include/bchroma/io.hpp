#pragma once

#include "bchroma/graph.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace bchroma {

/// Edge-list text: first line `n m`, then m lines `u v` with 0-based indices.
/// Vertex labels are not stored; reading yields plain labels 0..n-1.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::string_view text);

/// `{"vertices":[label,...],"edges":[[u,v],...]}` with labels in text form.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Reads a graph file; `.json` files use the JSON format, anything else the
/// edge-list format.
Graph load_graph_file(const std::string& path);

} // namespace bchroma
