#include "bchroma/serialize.hpp"

#include "bchroma/error.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace bchroma {

namespace {

using nlohmann::json;

Vertex lookup(const Graph& g, const std::string& text)
{
    auto v = g.find(VertexLabel::parse(text));
    if (!v)
        throw ParseError("unknown vertex label " + text, 0);
    return *v;
}

// Evenly spaced hues; good enough to tell up to a few dozen classes apart.
std::string fill_color(Color c, Color k)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << static_cast<double>(c - 1) / std::max<Color>(k, 1) << " 0.45 0.95";
    return out.str();
}

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

json certificate_to_json(const Graph& g, const BColoringCertificate& cert)
{
    if (cert.coloring.vertex_count() != g.vertex_count())
        throw std::invalid_argument("certificate does not cover the graph");
    json colors = json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        colors[g.label(v).to_string()] = cert.coloring[v];
    json b = json::object();
    for (Color c = 1; c <= cert.k() && c <= cert.b_vertices.size(); ++c)
        b[std::to_string(c)] = g.label(cert.b_vertex(c)).to_string();
    return {{"schema", schema_version}, {"k", cert.k()}, {"colors", colors}, {"b_vertices", b}};
}

BColoringCertificate certificate_from_json(const Graph& g, const json& j)
{
    try {
        auto k = j.at("k").get<Color>();
        std::vector<Color> colors(g.vertex_count(), 0);
        for (auto& [label, color] : j.at("colors").items())
            colors[lookup(g, label)] = color.get<Color>();
        if (std::find(colors.begin(), colors.end(), Color{0}) != colors.end())
            throw ParseError("certificate leaves a vertex uncolored", 0);
        std::vector<Vertex> b(k, 0);
        std::vector<bool> seen(k, false);
        for (auto& [color, label] : j.at("b_vertices").items()) {
            auto c = static_cast<Color>(std::stoul(color));
            if (c < 1 || c > k)
                throw ParseError("b-vertex key " + color + " outside the palette", 0);
            b[c - 1] = lookup(g, label.get<std::string>());
            seen[c - 1] = true;
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw ParseError("certificate lacks a b-vertex for some color", 0);
        return {Coloring(std::move(colors), k), std::move(b)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
    }
}

json budget_to_json(const Budget& budget)
{
    return {{"max_nodes", budget.max_nodes},
            {"max_seconds", budget.max_seconds},
            {"workers", budget.workers},
            {"max_assignments", budget.max_assignments}};
}

json search_report_to_json(const Graph& g, const SearchReport& report)
{
    json per_k = json::object();
    for (const auto& [k, outcome] : report.per_k_outcomes)
        per_k[std::to_string(k)] = to_string(outcome);
    json out = {{"schema", schema_version},
                {"phi", report.phi},
                {"nodes_explored", report.nodes_explored},
                {"elapsed_seconds", report.elapsed.count()},
                {"per_k", per_k},
                {"budget", budget_to_json(report.budget)}};
    if (report.phi > 0)
        out["witness"] = certificate_to_json(g, report.witness);
    return out;
}

json count_report_to_json(const CountReport& report)
{
    return {{"schema", schema_version},
            {"mode", to_string(report.mode)},
            {"k", report.k},
            {"count", report.count},
            {"total_assignments", report.total_assignments},
            {"probability", report.probability()},
            {"probability_percent", report.probability_percent()},
            {"nodes_explored", report.nodes_explored},
            {"elapsed_seconds", report.elapsed.count()}};
}

json grid_to_json(const GridColoring& grid)
{
    json cells = json::array();
    for (std::size_t r = 1; r <= grid.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 1; c <= grid.cols; ++c) {
            auto x = grid.at(r, c);
            row.push_back(x ? json(*x) : json(nullptr));
        }
        cells.push_back(row);
    }
    json circled = json::array();
    for (auto [r, c] : grid.circled)
        circled.push_back({r, c});
    return {{"schema", schema_version}, {"rows", grid.rows}, {"cols", grid.cols}, {"cells", cells}, {"circled", circled}};
}

GridColoring grid_from_json(const json& j)
{
    try {
        GridColoring grid(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
        const auto& cells = j.at("cells");
        if (cells.size() != grid.rows)
            throw ParseError("grid row count mismatch", 0);
        for (std::size_t r = 0; r < grid.rows; ++r) {
            if (cells[r].size() != grid.cols)
                throw ParseError("grid column count mismatch in row " + std::to_string(r + 1), 0);
            for (std::size_t c = 0; c < grid.cols; ++c)
                if (!cells[r][c].is_null())
                    grid.set(r + 1, c + 1, cells[r][c].get<Color>());
        }
        for (const auto& rc : j.value("circled", json::array())) {
            auto r = rc.at(0).get<std::size_t>();
            auto c = rc.at(1).get<std::size_t>();
            grid.at(r, c);
            grid.circled.insert({r, c});
        }
        return grid;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed grid: ") + e.what(), 0);
    } catch (const std::out_of_range& e) {
        throw ParseError(std::string("malformed grid: ") + e.what(), 0);
    }
}

std::string grid_to_text(const GridColoring& grid)
{
    std::size_t width = 1;
    auto cell = [&](std::size_t r, std::size_t c) {
        auto x = grid.at(r, c);
        std::string s = x ? std::to_string(*x) : ".";
        return grid.circled.count({r, c}) ? "(" + s + ")" : s;
    };
    for (std::size_t r = 1; r <= grid.rows; ++r)
        for (std::size_t c = 1; c <= grid.cols; ++c)
            width = std::max(width, cell(r, c).size());
    std::ostringstream out;
    for (std::size_t r = 1; r <= grid.rows; ++r) {
        for (std::size_t c = 1; c <= grid.cols; ++c)
            out << (c > 1 ? " " : "") << std::setw(static_cast<int>(width)) << cell(r, c);
        out << '\n';
    }
    return out.str();
}

std::string to_dot(const Graph& g, const BColoringCertificate* cert)
{
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n";
    std::vector<bool> is_b(g.vertex_count(), false);
    if (cert)
        for (auto v : cert->b_vertices)
            if (v < is_b.size())
                is_b[v] = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=" << quoted(g.label(v).to_string());
        if (cert) {
            auto c = cert->coloring[v];
            out << ", xlabel=" << quoted(std::to_string(c)) << ", fillcolor=" << quoted(fill_color(c, cert->k()));
            if (is_b[v])
                out << ", peripheries=2, penwidth=2";
        }
        out << "];\n";
    }
    for (const auto& e : g.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace bchroma
