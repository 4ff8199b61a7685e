#include "bchroma/constructions.hpp"

#include "bchroma/error.hpp"
#include "bchroma/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace bchroma {

namespace {

// Lowest color in [1..k] absent from v's colored neighbours.
Color lowest_free(const Graph& g, const std::vector<Color>& col, Vertex v, Color k)
{
    std::vector<bool> taken(k + 2, false);
    for (auto w : g.neighbors(v))
        if (col[w] != 0 && col[w] <= k)
            taken[col[w]] = true;
    for (Color c = 1; c <= k; ++c)
        if (!taken[c])
            return c;
    throw Error("no free color left for vertex " + g.label(v).to_string());
}

void fill_greedy(const Graph& g, std::vector<Color>& col, Color k)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (col[v] == 0)
            col[v] = lowest_free(g, col, v, k);
}

BColoringCertificate checked(const Graph& g, std::vector<Color> col, Color k, std::vector<Vertex> b)
{
    BColoringCertificate cert{Coloring(std::move(col), k), std::move(b)};
    if (auto v = validate_certificate(g, cert); !v)
        throw Error("construction produced an invalid certificate: " + v.diagnostic);
    return cert;
}

void require_star_product(std::size_t n, std::size_t m)
{
    if (n < m)
        throw std::invalid_argument("expected n >= m, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    if (m < 1)
        throw HypothesisError("star products need m >= 1");
}

// Addressing inside T(S_n□S_m): product vertices first, then product edges.
class TotalAddress {
public:
    TotalAddress(const Graph& product, std::size_t n, std::size_t m) : p_(product), n_(n), m_(m) {}

    Vertex vertex(std::size_t i, std::size_t j) const { return resolve(p_, {i, j}); }
    Vertex edge(Vertex a, Vertex b) const { return p_.vertex_count() + edge_index(p_, a, b); }
    Vertex hub_edge(std::size_t i) const { return edge(vertex(0, 0), vertex(i, 0)); }
    Vertex center_edge(std::size_t j) const { return edge(vertex(0, 0), vertex(0, j)); }
    Vertex skeleton_edge(std::size_t i, std::size_t j) const { return edge(vertex(i, 0), vertex(i, j)); }

    Vertex slot(const Slot& s, std::size_t j) const
    {
        switch (s.kind) {
        case Slot::Kind::InnerEdge:
            return edge(vertex(0, j), vertex(s.i, j));
        case Slot::Kind::Leaf:
            return vertex(s.i, j);
        case Slot::Kind::CenterEdge:
            return center_edge(j);
        }
        return 0;
    }

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }

private:
    const Graph& p_;
    std::size_t n_;
    std::size_t m_;
};

bool case_one(std::size_t n, std::size_t m) { return n > 2 * (m - 1); }

// Checks that a star's slots are distinct, in range and of the allowed kinds.
void check_slots(const std::vector<Slot>& slots, std::size_t n, bool leaves, bool center, std::size_t j)
{
    std::set<std::pair<int, std::size_t>> seen;
    for (const auto& s : slots) {
        bool ok = (s.kind == Slot::Kind::InnerEdge) || (s.kind == Slot::Kind::Leaf && leaves) ||
                  (s.kind == Slot::Kind::CenterEdge && center);
        if (s.kind != Slot::Kind::CenterEdge && (s.i < 1 || s.i > n))
            ok = false;
        if (!ok)
            throw std::invalid_argument("plan for star v" + std::to_string(j) + " has a slot of the wrong kind or range");
        auto key = std::make_pair(static_cast<int>(s.kind), s.kind == Slot::Kind::CenterEdge ? 0 : s.i);
        if (!seen.insert(key).second)
            throw std::invalid_argument("plan for star v" + std::to_string(j) + " repeats a slot");
    }
}

std::size_t count_kind(const std::vector<Slot>& slots, Slot::Kind kind)
{
    return static_cast<std::size_t>(
        std::count_if(slots.begin(), slots.end(), [&](const Slot& s) { return s.kind == kind; }));
}

void check_plan(const TotalColoringPlan& plan, std::size_t n, std::size_t m)
{
    if (plan.center_rank.size() != m || plan.stars.size() != m)
        throw std::invalid_argument("plan must describe exactly m stars");
    auto ranks = plan.center_rank;
    std::sort(ranks.begin(), ranks.end());
    for (std::size_t r = 0; r < m; ++r)
        if (ranks[r] != r + 1)
            throw std::invalid_argument("center ranks must be a permutation of 1..m");

    for (std::size_t j = 1; j <= m; ++j) {
        const auto& star = plan.stars[j - 1];
        std::vector<Slot> all = star.first;
        all.insert(all.end(), star.second.begin(), star.second.end());
        if (case_one(n, m)) {
            check_slots(star.first, n, false, false, j);
            check_slots(star.second, n, true, false, j);
            check_slots(all, n, true, false, j);
            if (star.first.size() != m - 1 || star.second.size() != m + n - 1 ||
                count_kind(all, Slot::Kind::InnerEdge) != n)
                throw std::invalid_argument("plan for star v" + std::to_string(j) +
                                            " must fill m-1 then m+n-1 slots covering every inner edge");
        } else if (j <= n - m + 2) {
            check_slots(star.first, n, false, false, j);
            if (star.first.size() != n || !star.second.empty())
                throw std::invalid_argument("plan for chosen star v" + std::to_string(j) +
                                            " must list all n inner edges in its first step");
        } else {
            check_slots(star.first, n, false, false, j);
            check_slots(star.second, n, false, true, j);
            check_slots(all, n, false, true, j);
            if (star.first.size() != n - m + 2 || star.second.size() != m - 1)
                throw std::invalid_argument("plan for star v" + std::to_string(j) +
                                            " must fill n-m+2 inner edges, then m-1 slots including its center edge");
        }
    }
}

std::vector<Slot> inner_edges(std::size_t from, std::size_t to)
{
    std::vector<Slot> out;
    for (std::size_t i = from; i <= to; ++i)
        out.push_back(Slot::inner_edge(i));
    return out;
}

std::vector<Slot> parse_slots(const std::string& text)
{
    // "E3 L2 X" style shorthand for the fixed tables below.
    std::vector<Slot> out;
    for (std::size_t pos = 0; pos < text.size();) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        char kind = text[pos++];
        std::size_t i = 0;
        while (pos < text.size() && text[pos] != ' ')
            i = i * 10 + static_cast<std::size_t>(text[pos++] - '0');
        out.push_back(kind == 'E' ? Slot::inner_edge(i) : kind == 'L' ? Slot::leaf(i) : Slot::center_edge());
    }
    return out;
}

std::vector<Color> sorted(std::vector<Color> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

void place(const TotalAddress& at, std::vector<Color>& col, const std::vector<Slot>& slots,
           const std::vector<Color>& colors, std::size_t j)
{
    for (std::size_t s = 0; s < slots.size(); ++s)
        col[at.slot(slots[s], j)] = colors[s];
}

BColoringCertificate total_case_one(const Graph& t, const TotalAddress& at, const TotalColoringPlan& plan)
{
    const auto n = at.n(), m = at.m();
    const auto k = static_cast<Color>(2 * m + n + 1);
    auto center = [&](std::size_t j) { return static_cast<Color>(m + n + 1 + plan.center_rank[j - 1]); };
    auto x1 = [&](std::size_t j) { return static_cast<Color>(n + 1 + j); };

    std::vector<Color> col(t.vertex_count(), 0);
    std::vector<Vertex> b(k);
    col[at.vertex(0, 0)] = 1;
    b[0] = at.vertex(0, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        col[at.hub_edge(i)] = static_cast<Color>(i + 1);
        b[i] = at.hub_edge(i);
    }
    for (std::size_t j = 1; j <= m; ++j) {
        col[at.center_edge(j)] = x1(j);
        b[x1(j) - 1] = at.center_edge(j);
        col[at.vertex(0, j)] = center(j);
        b[center(j) - 1] = at.vertex(0, j);
    }

    for (std::size_t j = 1; j <= m; ++j) {
        const auto& star = plan.stars[j - 1];
        std::vector<Color> others;
        std::set<Color> blocked{1, x1(j)};
        for (std::size_t l = 1; l <= m; ++l) {
            blocked.insert(center(l));
            if (l != j)
                others.push_back(center(l));
        }
        place(at, col, star.first, sorted(others), j);
        std::vector<Color> free;
        for (Color c = 1; c <= k; ++c)
            if (!blocked.count(c))
                free.push_back(c);
        place(at, col, star.second, free, j);
        for (std::size_t i = 1; i <= n; ++i) {
            if (col[at.vertex(i, j)] == 0)
                col[at.vertex(i, j)] = 1;
            col[at.skeleton_edge(i, j)] = center(j);
        }
    }
    fill_greedy(t, col, k);
    return checked(t, std::move(col), k, std::move(b));
}

BColoringCertificate total_case_two(const Graph& t, const TotalAddress& at, const TotalColoringPlan& plan)
{
    const auto n = at.n(), m = at.m();
    const auto k = static_cast<Color>(2 * n + 3);
    const auto chosen = n - m + 2;
    auto center = [&](std::size_t j) { return static_cast<Color>(n + 1 + plan.center_rank[j - 1]); };
    auto x1 = [&](std::size_t j) { return static_cast<Color>(n + m + 1 + j); };

    std::vector<Color> col(t.vertex_count(), 0);
    std::vector<Vertex> b(k);
    col[at.vertex(0, 0)] = 1;
    b[0] = at.vertex(0, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        col[at.hub_edge(i)] = static_cast<Color>(i + 1);
        b[i] = at.hub_edge(i);
    }
    for (std::size_t j = 1; j <= m; ++j) {
        col[at.vertex(0, j)] = center(j);
        b[center(j) - 1] = at.vertex(0, j);
        if (j <= chosen) {
            col[at.center_edge(j)] = x1(j);
            b[x1(j) - 1] = at.center_edge(j);
        }
        for (std::size_t i = 1; i <= n; ++i) {
            col[at.vertex(i, j)] = static_cast<Color>(i + 1);
            col[at.skeleton_edge(i, j)] = center(j);
        }
    }

    for (std::size_t j = 1; j <= m; ++j) {
        const auto& star = plan.stars[j - 1];
        std::vector<Color> others;
        for (std::size_t l = 1; l <= m; ++l)
            if (l != j)
                others.push_back(center(l));
        std::vector<Color> chosen_x1;
        for (std::size_t l = 1; l <= chosen; ++l)
            if (l != j)
                chosen_x1.push_back(x1(l));
        if (j <= chosen) {
            auto colors = others;
            colors.insert(colors.end(), chosen_x1.begin(), chosen_x1.end());
            place(at, col, star.first, sorted(colors), j);
        } else {
            place(at, col, star.first, sorted(chosen_x1), j);
            place(at, col, star.second, sorted(others), j);
        }
    }
    fill_greedy(t, col, k);
    return checked(t, std::move(col), k, std::move(b));
}

std::vector<Color> power_hubs(const Graph& p, std::size_t n, std::size_t m)
{
    std::vector<Color> col(p.vertex_count(), 0);
    col[resolve(p, {0, 0})] = 1;
    for (std::size_t j = 1; j <= m; ++j)
        col[resolve(p, {0, j})] = static_cast<Color>(1 + j);
    for (std::size_t i = 1; i <= n; ++i)
        col[resolve(p, {i, 0})] = static_cast<Color>(m + 1 + i);
    return col;
}

std::vector<Vertex> hub_b_vertices(const Graph& p, std::size_t n, std::size_t m)
{
    std::vector<Vertex> b{resolve(p, {0, 0})};
    for (std::size_t j = 1; j <= m; ++j)
        b.push_back(resolve(p, {0, j}));
    for (std::size_t i = 1; i <= n; ++i)
        b.push_back(resolve(p, {i, 0}));
    return b;
}

} // namespace

Vertex resolve(const Graph& star_product, StarProductAddress a)
{
    const auto* d = star_product.decomposition();
    if (!d)
        throw std::invalid_argument("graph carries no product decomposition");
    if (a.i >= d->inner.vertex_count() || a.j >= d->skeleton.vertex_count())
        throw std::out_of_range("address (" + std::to_string(a.i) + "," + std::to_string(a.j) +
                                ") lies outside the product");
    return d->at(a.i, a.j);
}

Graph star_product_graph(std::size_t n, std::size_t m) { return cartesian_product(star(n), star(m)); }

Graph line_star_product_graph(std::size_t n, std::size_t m) { return line_graph(star_product_graph(n, m)); }

Graph total_star_product_graph(std::size_t n, std::size_t m) { return total_graph(star_product_graph(n, m)); }

Graph power_star_product_graph(std::size_t n, std::size_t m, std::size_t k)
{
    return graph_power(star_product_graph(n, m), k);
}

BColoringCertificate color_star_product(std::size_t n, std::size_t m)
{
    if (m < 2)
        throw HypothesisError("the star-product construction needs m >= 2; smaller cases are left to the solver");
    require_star_product(n, m);
    const auto g = star_product_graph(n, m);
    const auto k = static_cast<Color>(m + 2);
    auto at = [&](std::size_t i, std::size_t j) { return resolve(g, {i, j}); };

    std::vector<Color> col(g.vertex_count(), 0);
    col[at(0, 0)] = 1;
    col[at(1, 0)] = k;
    for (std::size_t j = 1; j <= m; ++j) {
        col[at(0, j)] = static_cast<Color>(j + 1);
        col[at(1, j)] = static_cast<Color>(j % m + 2);
        // Colors the center still misses, in increasing order, then overflow.
        std::vector<Color> missing;
        for (Color c = 2; c <= k; ++c)
            if (c != col[at(0, j)] && c != col[at(1, j)])
                missing.push_back(c);
        for (std::size_t i = 2; i <= n; ++i)
            col[at(i, j)] = i - 2 < missing.size() ? missing[i - 2] : 1;
    }
    for (std::size_t i = 2; i <= n; ++i)
        col[at(i, 0)] = lowest_free(g, col, at(i, 0), k);

    std::vector<Vertex> b(k);
    b[0] = at(0, 0);
    for (std::size_t j = 1; j <= m; ++j)
        b[j] = at(0, j);
    b[k - 1] = at(1, 0);
    return checked(g, std::move(col), k, std::move(b));
}

BColoringCertificate color_line_star_product(std::size_t n, std::size_t m)
{
    if (n < 1 || m < 1)
        throw HypothesisError("the line-graph construction needs n, m >= 1");
    const auto p = star_product_graph(n, m);
    const auto l = line_graph(p);
    const auto k = static_cast<Color>(m + n);
    const auto hub = resolve(p, {0, 0});

    std::vector<Color> col(l.vertex_count(), 0);
    std::vector<Vertex> b;
    for (auto w : p.neighbors(hub)) {
        auto e = edge_index(p, hub, w);
        b.push_back(e);
        col[e] = static_cast<Color>(b.size());
    }
    fill_greedy(l, col, k);
    return checked(l, std::move(col), k, std::move(b));
}

TotalColoringPlan canonical_total_plan(std::size_t n, std::size_t m)
{
    if (m < 3 || n < m)
        throw HypothesisError("total-graph plans need n >= m >= 3");
    TotalColoringPlan plan;
    for (std::size_t j = 1; j <= m; ++j)
        plan.center_rank.push_back(j);
    if (case_one(n, m)) {
        for (std::size_t j = 1; j <= m; ++j) {
            StarPlan star{inner_edges(1, m - 1), inner_edges(m, n)};
            for (std::size_t i = 1; i <= 2 * m - 2; ++i)
                star.second.push_back(Slot::leaf(i));
            plan.stars.push_back(std::move(star));
        }
        return plan;
    }
    const auto chosen = n - m + 2;
    // Unchosen center edges take the smallest other center color not yet used.
    std::set<std::size_t> used;
    for (std::size_t j = 1; j <= m; ++j) {
        if (j <= chosen) {
            plan.stars.push_back({inner_edges(1, n), {}});
            continue;
        }
        std::size_t pick = 0;
        while (pick == j || pick == 0 || used.count(pick))
            ++pick;
        used.insert(pick);
        auto position = pick < j ? pick - 1 : pick - 2;
        auto rest = inner_edges(chosen + 1, n);
        rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(position), Slot::center_edge());
        plan.stars.push_back({inner_edges(1, chosen), std::move(rest)});
    }
    return plan;
}

TotalColoringPlan appendix_total_plan(std::size_t n, std::size_t m)
{
    TotalColoringPlan plan;
    if (n == 5 && m == 3) {
        plan.center_rank = {1, 2, 3};
        plan.stars = {
            {parse_slots("E2 E1"), parse_slots("E3 E4 E5 L2 L3 L4 L1")},
            {parse_slots("E2 E1"), parse_slots("E5 L2 E3 L3 E4 L4 L1")},
            {parse_slots("E2 E1"), parse_slots("E5 E3 L2 L3 E4 L4 L1")},
        };
    } else if (n == 5 && m == 4) {
        plan.center_rank = {1, 2, 4, 3};
        plan.stars = {
            {parse_slots("E1 E2 E3 E5 E4"), {}},
            {parse_slots("E3 E4 E5 E1 E2"), {}},
            {parse_slots("E1 E4 E5 E2 E3"), {}},
            {parse_slots("E3 E4 E2"), parse_slots("X E1 E5")},
        };
    } else {
        throw std::invalid_argument("worked plans exist only for (5,3) and (5,4)");
    }
    return plan;
}

BColoringCertificate color_total_star_product(std::size_t n, std::size_t m)
{
    return color_total_star_product(n, m, canonical_total_plan(n, m));
}

BColoringCertificate color_total_star_product(std::size_t n, std::size_t m, const TotalColoringPlan& plan)
{
    if (m < 3)
        throw HypothesisError("the total-graph construction needs m >= 3");
    require_star_product(n, m);
    check_plan(plan, n, m);
    const auto p = star_product_graph(n, m);
    const auto t = total_graph(p);
    TotalAddress at(p, n, m);
    return case_one(n, m) ? total_case_one(t, at, plan) : total_case_two(t, at, plan);
}

BColoringCertificate color_power_star_product(std::size_t n, std::size_t m, std::size_t k)
{
    require_star_product(n, m);
    if (k == 0)
        throw std::invalid_argument("power must be at least 1");
    if (k == 1)
        return color_star_product(n, m);

    const auto g = power_star_product_graph(n, m, k);
    const auto p = star_product_graph(n, m);
    if (k >= 4) {
        std::vector<Color> col(g.vertex_count());
        std::vector<Vertex> b(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            col[v] = static_cast<Color>(v + 1);
            b[v] = v;
        }
        return checked(g, std::move(col), static_cast<Color>(g.vertex_count()), std::move(b));
    }

    if (k == 3) {
        GridColoring grid(n, m);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= m; ++j)
                grid.set(i, j, static_cast<Color>((i - 1 + j - 1) % n + 1));
        const auto offset = static_cast<Color>(n + m + 1);
        auto coloring = embed_rook_into_power3(n, m, grid, offset);
        auto b = hub_b_vertices(p, n, m);
        // Column 1 holds every grid color once.
        for (std::size_t i = 1; i <= n; ++i)
            b.push_back(resolve(p, {i, 1}));
        return checked(g, coloring.colors(), coloring.palette_size(), std::move(b));
    }

    auto col = power_hubs(p, n, m);
    auto b = hub_b_vertices(p, n, m);
    if (n > m) {
        // Leaf (w_i)_{v_j} repeats the hub color of w_{i'} with i' = i+j shifted
        // cyclically; rows and columns stay rainbow and i' != i.
        const auto k2 = static_cast<Color>(n + m + 1);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= m; ++j)
                col[resolve(p, {i, j})] = static_cast<Color>(m + 1 + (i - 1 + j) % n + 1);
        return checked(g, std::move(col), k2, std::move(b));
    }
    const auto k2 = static_cast<Color>(2 * n + 2);
    for (std::size_t i = 1; i <= n; ++i)
        col[resolve(p, {i, i})] = k2;
    for (std::size_t l = 2; l <= n; ++l) {
        col[resolve(p, {l, 1})] = col[resolve(p, {0, l})];
        col[resolve(p, {1, l})] = col[resolve(p, {l, 0})];
    }
    fill_greedy(g, col, k2);
    b.push_back(resolve(p, {1, 1}));
    return checked(g, std::move(col), k2, std::move(b));
}

GridColoring::GridColoring(std::size_t rows_, std::size_t cols_) : rows(rows_), cols(cols_), cells(rows_ * cols_) {}

std::optional<Color> GridColoring::at(std::size_t r, std::size_t c) const
{
    if (r < 1 || r > rows || c < 1 || c > cols)
        throw std::out_of_range("grid cell out of range");
    return cells[(r - 1) * cols + (c - 1)];
}

void GridColoring::set(std::size_t r, std::size_t c, Color color)
{
    if (r < 1 || r > rows || c < 1 || c > cols)
        throw std::out_of_range("grid cell out of range");
    if (color == 0)
        throw std::invalid_argument("grid colors start at 1");
    cells[(r - 1) * cols + (c - 1)] = color;
}

Color GridColoring::palette_size() const
{
    Color top = 0;
    for (const auto& c : cells)
        if (c)
            top = std::max(top, *c);
    return top;
}

bool GridColoring::complete() const
{
    return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.has_value(); });
}

bool GridColoring::is_proper() const
{
    for (std::size_t r = 1; r <= rows; ++r)
        for (std::size_t c = 1; c <= cols; ++c) {
            auto x = at(r, c);
            if (!x)
                continue;
            for (std::size_t c2 = c + 1; c2 <= cols; ++c2)
                if (at(r, c2) == x)
                    return false;
            for (std::size_t r2 = r + 1; r2 <= rows; ++r2)
                if (at(r2, c) == x)
                    return false;
        }
    return true;
}

GridColoring rook_grid_coloring(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("rook grids are defined for n >= 3");
    GridColoring grid(n, 3);
    auto fill = [&](const std::vector<std::vector<Color>>& rows) {
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < 3; ++c)
                grid.set(r + 1, c + 1, rows[r][c]);
    };
    if (n == 4) {
        fill({{1, 5, 4}, {2, 3, 5}, {3, 4, 1}, {4, 2, 3}});
        grid.circled = {{1, 1}, {2, 1}, {2, 3}, {3, 2}, {4, 3}};
    } else if (n == 5) {
        fill({{1, 6, 4}, {2, 3, 6}, {3, 1, 5}, {4, 5, 1}, {5, 4, 2}});
        grid.circled = {{1, 1}, {2, 1}, {2, 2}, {2, 3}, {3, 3}, {5, 2}};
    } else {
        for (std::size_t r = 1; r <= n; ++r)
            for (std::size_t c = 1; c <= 3; ++c)
                grid.set(r, c, static_cast<Color>((r - 1 + c - 1) % n + 1));
        if (n == 3)
            grid.circled = {{1, 1}, {1, 2}, {1, 3}};
        else
            for (std::size_t r = 1; r <= n; ++r)
                grid.circled.insert({r, 1});
    }
    return grid;
}

BColoringCertificate grid_certificate(const GridColoring& grid)
{
    if (!grid.complete())
        throw std::invalid_argument("grid has empty cells");
    const auto k = grid.palette_size();
    std::vector<Color> col;
    for (const auto& c : grid.cells)
        col.push_back(*c);
    std::vector<std::optional<Vertex>> b(k);
    for (auto [r, c] : grid.circled) {
        auto color = *grid.at(r, c);
        if (!b[color - 1])
            b[color - 1] = (r - 1) * grid.cols + (c - 1);
    }
    std::vector<Vertex> out;
    for (Color c = 1; c <= k; ++c) {
        if (!b[c - 1])
            throw std::invalid_argument("color " + std::to_string(c) + " has no circled cell");
        out.push_back(*b[c - 1]);
    }
    return {Coloring(std::move(col), k), std::move(out)};
}

Coloring embed_rook_into_power3(std::size_t n, std::size_t m, const GridColoring& grid, Color offset)
{
    require_star_product(n, m);
    if (grid.rows != n || grid.cols != m)
        throw std::invalid_argument("grid shape does not match n x m");
    if (!grid.complete() || !grid.is_proper())
        throw std::invalid_argument("grid must be a complete proper coloring of the rook graph");
    if (offset < n + m + 1)
        throw Error("offset " + std::to_string(offset) + " collides with the hub colors 1.." +
                    std::to_string(n + m + 1));
    const auto p = star_product_graph(n, m);
    auto col = power_hubs(p, n, m);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            col[resolve(p, {i, j})] = *grid.at(i, j) + offset;
    return Coloring(std::move(col), offset + grid.palette_size());
}

} // namespace bchroma
