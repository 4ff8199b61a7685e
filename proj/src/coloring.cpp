#include "bchroma/coloring.hpp"

#include <stdexcept>

namespace bchroma {

Coloring::Coloring(std::vector<Color> colors, Color k) : colors_(std::move(colors)), k_(k)
{
    for (std::size_t v = 0; v < colors_.size(); ++v)
        if (colors_[v] < 1 || colors_[v] > k_)
            throw std::invalid_argument("color " + std::to_string(colors_[v]) + " of vertex " +
                                        std::to_string(v) + " outside [1.." + std::to_string(k_) + "]");
}

bool is_proper(const Graph& g, const Coloring& c)
{
    if (c.vertex_count() != g.vertex_count())
        throw std::invalid_argument("coloring has " + std::to_string(c.vertex_count()) +
                                    " vertices, graph has " + std::to_string(g.vertex_count()));
    for (const auto& e : g.edges())
        if (c[e.u] == c[e.v])
            return false;
    return true;
}

bool is_b_vertex(const Graph& g, const Coloring& c, Vertex v)
{
    std::vector<bool> seen(c.palette_size() + 1, false);
    std::size_t missing = c.palette_size() - 1;
    seen[c[v]] = true;
    for (auto w : g.neighbors(v)) {
        if (!seen[c[w]]) {
            seen[c[w]] = true;
            if (--missing == 0)
                return true;
        }
    }
    return missing == 0;
}

Validation validate_certificate(const Graph& g, const BColoringCertificate& cert)
{
    const auto& c = cert.coloring;
    if (c.vertex_count() != g.vertex_count())
        return {false, 0, "coloring covers " + std::to_string(c.vertex_count()) + " vertices, graph has " +
                              std::to_string(g.vertex_count())};
    for (const auto& e : g.edges())
        if (c[e.u] == c[e.v])
            return {false, 0, "edge " + g.label(e.u).to_string() + "-" + g.label(e.v).to_string() +
                                  " is monochromatic (color " + std::to_string(c[e.u]) + ")"};
    if (cert.b_vertices.size() != c.palette_size())
        return {false, 0, "expected " + std::to_string(c.palette_size()) + " b-vertices, got " +
                              std::to_string(cert.b_vertices.size())};
    for (Color col = 1; col <= c.palette_size(); ++col) {
        auto v = cert.b_vertex(col);
        if (v >= g.vertex_count())
            return {false, col, "b-vertex of color " + std::to_string(col) + " is out of range"};
        if (c[v] != col)
            return {false, col, "b-vertex " + g.label(v).to_string() + " has color " + std::to_string(c[v]) +
                                    ", expected " + std::to_string(col)};
        if (!is_b_vertex(g, c, v))
            return {false, col, "vertex " + g.label(v).to_string() + " misses a color in its neighbourhood"};
    }
    return {};
}

std::set<Color> used_colors(const Coloring& c)
{
    return {c.colors().begin(), c.colors().end()};
}

BColoringCertificate permute_colors(const BColoringCertificate& cert, const std::vector<Color>& perm)
{
    const auto k = cert.k();
    if (perm.size() != k)
        throw std::invalid_argument("permutation size differs from palette size");
    std::vector<bool> hit(k + 1, false);
    for (auto p : perm) {
        if (p < 1 || p > k || hit[p])
            throw std::invalid_argument("not a permutation of the palette");
        hit[p] = true;
    }
    std::vector<Color> colors;
    colors.reserve(cert.coloring.vertex_count());
    for (auto c : cert.coloring.colors())
        colors.push_back(perm[c - 1]);
    BColoringCertificate out{Coloring(std::move(colors), k), std::vector<Vertex>(k)};
    for (Color c = 1; c <= k; ++c)
        out.b_vertices[perm[c - 1] - 1] = cert.b_vertex(c);
    return out;
}

std::optional<BColoringCertificate> certify(const Graph& g, const Coloring& c)
{
    if (!is_proper(g, c))
        return std::nullopt;
    const auto k = c.palette_size();
    std::vector<std::optional<Vertex>> found(k);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!found[c[v] - 1] && is_b_vertex(g, c, v))
            found[c[v] - 1] = v;
    BColoringCertificate cert{c, {}};
    for (const auto& f : found) {
        if (!f)
            return std::nullopt;
        cert.b_vertices.push_back(*f);
    }
    return cert;
}

} // namespace bchroma
