#pragma once

#include "bchroma/coloring.hpp"
#include "bchroma/graph.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace bchroma {

/// Vertex (w_i)_{v_j} of S_n□S_m: i indexes the inner star S_n, j the
/// skeleton star S_m, 0 being the center in both.
struct StarProductAddress {
    std::size_t i = 0;
    std::size_t j = 0;
};

/// Resolves an address through the product's decomposition.
Vertex resolve(const Graph& star_product, StarProductAddress a);

Graph star_product_graph(std::size_t n, std::size_t m);
Graph line_star_product_graph(std::size_t n, std::size_t m);
Graph total_star_product_graph(std::size_t n, std::size_t m);
/// (S_n□S_m)^k; vertex indices agree with star_product_graph(n, m).
Graph power_star_product_graph(std::size_t n, std::size_t m, std::size_t k);

/// (m+2)-coloring of S_n□S_m. Needs n >= m >= 2: m < 2 throws
/// HypothesisError, n < m throws std::invalid_argument.
BColoringCertificate color_star_product(std::size_t n, std::size_t m);

/// (m+n)-coloring of L(S_n□S_m): the edges at (w_0)_{v_0} get 1..m+n, the
/// remaining vertices are colored greedily.
BColoringCertificate color_line_star_product(std::size_t n, std::size_t m);

/// Position inside one skeleton star of the total graph that a plan step fills.
struct Slot {
    enum class Kind { InnerEdge, Leaf, CenterEdge };
    Kind kind = Kind::InnerEdge;
    /// Leaf index in [1..n]; unused for CenterEdge.
    std::size_t i = 0;

    static Slot inner_edge(std::size_t i) { return {Kind::InnerEdge, i}; }
    static Slot leaf(std::size_t i) { return {Kind::Leaf, i}; }
    static Slot center_edge() { return {Kind::CenterEdge, 0}; }

    friend bool operator==(const Slot&, const Slot&) = default;
};

/// Order in which a star's slots receive their (ascending) color lists.
///
/// For n > 2(m-1), `first` takes the other centers' colors (m-1 inner edges)
/// and `second` the remaining free colors (m+n-1 inner edges and leaves); the
/// leaves left over get color 1. Otherwise a star among the first n-m+2 lists
/// all n inner edges in `first`; any other star lists n-m+2 inner edges in
/// `first` and the remaining inner edges plus its center edge in `second`.
struct StarPlan {
    std::vector<Slot> first;
    std::vector<Slot> second;
};

struct TotalColoringPlan {
    /// center_rank[j-1] in [1..m] orders the center colors across stars.
    std::vector<std::size_t> center_rank;
    /// stars[j-1] is the plan of skeleton star v_j.
    std::vector<StarPlan> stars;
};

/// Ascending slot orders and identity center ranks.
TotalColoringPlan canonical_total_plan(std::size_t n, std::size_t m);
/// The worked orders for (5,3) and (5,4); throws std::invalid_argument otherwise.
TotalColoringPlan appendix_total_plan(std::size_t n, std::size_t m);

/// Coloring of T(S_n□S_m) with 2m+n+1 colors when n > 2(m-1) and 2n+3
/// colors otherwise. Needs n >= m >= 3 (m < 3 throws HypothesisError).
/// Throws std::invalid_argument when the plan does not fit (n, m).
BColoringCertificate color_total_star_product(std::size_t n, std::size_t m);
BColoringCertificate color_total_star_product(std::size_t n, std::size_t m, const TotalColoringPlan& plan);

/// Coloring of (S_n□S_m)^k for n >= m >= 1. k = 1 delegates to
/// color_star_product; k = 3 yields the 2n+m+1 lower-bound coloring.
BColoringCertificate color_power_star_product(std::size_t n, std::size_t m, std::size_t k);

/// Partially filled rows x cols table; cells and circled positions are 1-based.
struct GridColoring {
    std::size_t rows = 0;
    std::size_t cols = 0;
    /// Row-major; nullopt marks an empty cell.
    std::vector<std::optional<Color>> cells;
    std::set<std::pair<std::size_t, std::size_t>> circled;

    GridColoring() = default;
    GridColoring(std::size_t rows, std::size_t cols);

    std::optional<Color> at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Color color);
    /// Largest color present.
    Color palette_size() const;
    bool complete() const;
    /// Distinct colors within every row and every column.
    bool is_proper() const;

    friend bool operator==(const GridColoring&, const GridColoring&) = default;
};

/// Colorings of K_n□K_3: the fixed tables for n = 3, 4, 5 and the cyclic
/// n-coloring for n >= 6. Throws std::invalid_argument for n < 3.
GridColoring rook_grid_coloring(std::size_t n);

/// Certificate on cartesian_product(complete(rows), complete(cols)), cell
/// (r,c) being vertex (r-1)*cols + (c-1). Each color needs a circled cell.
BColoringCertificate grid_certificate(const GridColoring& grid);

/// Coloring of (S_n□S_m)^3 with the hubs colored 1..n+m+1 and leaf (w_i)_{v_j}
/// colored grid(i,j) + offset. Throws Error on an offset below n+m+1.
Coloring embed_rook_into_power3(std::size_t n, std::size_t m, const GridColoring& grid, Color offset);

} // namespace bchroma
