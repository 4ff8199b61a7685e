#include "bchroma/io.hpp"

#include "bchroma/error.hpp"

#include <fstream>
#include <sstream>

namespace bchroma {

std::string write_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph read_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    long long n = -1;
    long long m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw ParseError("edge list must start with non-negative `n m`", 0);
    GraphBuilder b(static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = -1;
        long long v = -1;
        auto pos = static_cast<std::size_t>(in.tellg());
        if (!(in >> u >> v))
            throw ParseError("expected edge " + std::to_string(i + 1) + " of " + std::to_string(m), pos);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge endpoint out of range", pos);
        try {
            b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), pos);
        }
    }
    std::string rest;
    if (in >> rest)
        throw ParseError("trailing data after edge list", static_cast<std::size_t>(in.tellg()) - rest.size());
    return std::move(b).build();
}

nlohmann::json graph_to_json(const Graph& g)
{
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& l : g.labels())
        vertices.push_back(l.to_string());
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"vertices", vertices}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph JSON needs \"vertices\" and \"edges\"", 0);
    GraphBuilder b;
    for (const auto& v : j.at("vertices")) {
        if (v.is_number_unsigned())
            b.add_vertex(VertexLabel::plain(v.get<std::size_t>()));
        else
            b.add_vertex(VertexLabel::parse(v.get<std::string>()));
    }
    std::size_t index = 0;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("edge must be a pair of vertex indices", index);
        auto u = e[0].get<std::size_t>();
        auto v = e[1].get<std::size_t>();
        if (u >= b.vertex_count() || v >= b.vertex_count())
            throw ParseError("edge endpoint out of range", index);
        try {
            b.add_edge(u, v);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what(), index);
        }
        ++index;
    }
    try {
        return std::move(b).build();
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what(), 0);
    }
}

Graph load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open graph file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto text = buffer.str();
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.what(), e.byte);
        }
        return graph_from_json(j);
    }
    return read_edge_list(text);
}

} // namespace bchroma
