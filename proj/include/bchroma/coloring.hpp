#pragma once

#include "bchroma/graph.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bchroma {

using Color = std::uint32_t;

/// Total assignment vertex -> color in [1..k].
class Coloring {
public:
    Coloring() = default;
    /// Throws std::invalid_argument if some color lies outside [1..k].
    Coloring(std::vector<Color> colors, Color k);

    std::size_t vertex_count() const noexcept { return colors_.size(); }
    Color palette_size() const noexcept { return k_; }
    Color operator[](Vertex v) const { return colors_.at(v); }
    const std::vector<Color>& colors() const noexcept { return colors_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
    Color k_ = 0;
};

/// A coloring together with one designated b-vertex per color.
struct BColoringCertificate {
    Coloring coloring;
    /// b_vertices[c-1] is the b-vertex of color c.
    std::vector<Vertex> b_vertices;

    Color k() const noexcept { return coloring.palette_size(); }
    Vertex b_vertex(Color c) const { return b_vertices.at(c - 1); }

    friend bool operator==(const BColoringCertificate&, const BColoringCertificate&) = default;
};

/// Throws std::invalid_argument when c does not cover exactly V(g).
bool is_proper(const Graph& g, const Coloring& c);

/// True iff N(v) sees every palette color other than c(v).
bool is_b_vertex(const Graph& g, const Coloring& c, Vertex v);

struct Validation {
    bool valid = true;
    /// First color whose designated b-vertex fails; 0 for properness or shape errors.
    Color failing_color = 0;
    std::string diagnostic;

    explicit operator bool() const noexcept { return valid; }
};

Validation validate_certificate(const Graph& g, const BColoringCertificate& cert);

std::set<Color> used_colors(const Coloring& c);

/// Recolors through perm, where perm[c-1] is the new color of c. The result
/// keeps b_vertices keyed by the new colors.
BColoringCertificate permute_colors(const BColoringCertificate& cert, const std::vector<Color>& perm);

/// Finds a b-vertex for every color of a proper coloring, lowest index first.
/// Returns nullopt when some color has none.
std::optional<BColoringCertificate> certify(const Graph& g, const Coloring& c);

} // namespace bchroma
