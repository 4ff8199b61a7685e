#include "bchroma/solver.hpp"

#include "search_support.hpp"

#include <cstdlib>
#include <stdexcept>

namespace bchroma {

using detail::bit;
using detail::Mask;
using detail::NodeCounter;

Budget Budget::from_environment()
{
    Budget b;
    if (const char* env = std::getenv("BCHROMA_MAX_NODES")) {
        char* end = nullptr;
        auto value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0)
            b.max_nodes = value;
    }
    return b;
}

std::string to_string(KOutcome outcome)
{
    switch (outcome) {
    case KOutcome::Found:
        return "found";
    case KOutcome::Exhausted:
        return "exhausted";
    case KOutcome::BudgetExceeded:
        return "budget-exceeded";
    }
    return "unknown";
}

std::size_t m_degree(const Graph& g)
{
    if (g.empty())
        throw std::invalid_argument("m-degree of the empty graph is undefined");
    auto profile = degree_profile(g);
    std::size_t best = 0;
    for (std::size_t i = 1; i <= profile.degrees.size(); ++i)
        if (profile.degrees[i - 1] + 1 >= i)
            best = i;
    return best;
}

namespace {

// Maximum clique by branch and bound with a greedy-coloring bound.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, NodeCounter& counter) : g_(g), counter_(counter) {}

    std::size_t run()
    {
        std::vector<Vertex> all;
        for (Vertex v = 0; v < g_.vertex_count(); ++v)
            all.push_back(v);
        expand(all, 0);
        return best_;
    }

private:
    // Colors candidates greedily; returns them sorted by color with the bounds.
    void color_sort(const std::vector<Vertex>& cand, std::vector<Vertex>& order, std::vector<std::size_t>& bounds) const
    {
        std::vector<std::vector<Vertex>> classes;
        for (auto v : cand) {
            bool placed = false;
            for (auto& cls : classes) {
                bool clash = false;
                for (auto u : cls)
                    if (g_.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed)
                classes.push_back({v});
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (auto v : classes[c]) {
                order.push_back(v);
                bounds.push_back(c + 1);
            }
    }

    void expand(const std::vector<Vertex>& cand, std::size_t size)
    {
        counter_.tick();
        if (cand.empty()) {
            best_ = std::max(best_, size);
            return;
        }
        std::vector<Vertex> order;
        std::vector<std::size_t> bounds;
        color_sort(cand, order, bounds);
        std::vector<bool> removed(g_.vertex_count(), false);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + bounds[i] <= best_)
                return;
            auto v = order[i];
            std::vector<Vertex> next;
            for (std::size_t j = 0; j < order.size(); ++j)
                if (!removed[order[j]] && order[j] != v && g_.adjacent(v, order[j]))
                    next.push_back(order[j]);
            expand(next, size + 1);
            removed[v] = true;
        }
    }

    const Graph& g_;
    NodeCounter& counter_;
    std::size_t best_ = 0;
};

std::size_t max_clique(const Graph& g, const Budget& budget)
{
    NodeCounter counter(budget.max_nodes, detail::deadline_after(budget.max_seconds));
    try {
        return CliqueSearch(g, counter).run();
    } catch (const detail::NodeLimitHit&) {
        throw BudgetExceeded("node budget exhausted in clique search", budget.max_nodes);
    } catch (const detail::DeadlineHit&) {
        throw BudgetExceeded("time budget exhausted in clique search", counter.nodes());
    }
}

// DSATUR backtracking over domain masks; a new color is opened only as the
// next unused one, which removes color-permutation symmetry.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, Color k, NodeCounter& counter) : g_(g), k_(k), counter_(counter) {}

    std::optional<std::vector<Color>> run()
    {
        std::vector<Mask> dom(g_.vertex_count(), detail::full_mask(k_));
        std::vector<Color> col(g_.vertex_count(), 0);
        if (descend(dom, col, 0))
            return col;
        return std::nullopt;
    }

private:
    bool descend(std::vector<Mask>& dom, std::vector<Color>& col, Color used)
    {
        counter_.tick();
        Vertex pick = g_.vertex_count();
        int best_size = 65;
        std::size_t best_degree = 0;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (col[v] != 0)
                continue;
            int size = std::popcount(dom[v]);
            if (size < best_size || (size == best_size && g_.degree(v) > best_degree)) {
                best_size = size;
                best_degree = g_.degree(v);
                pick = v;
            }
        }
        if (pick == g_.vertex_count())
            return true;
        Mask allowed = dom[pick] & detail::full_mask(std::min<Color>(used + 1, k_));
        for (Mask m = allowed; m != 0; m &= m - 1) {
            auto c = detail::lowest_color(m);
            std::vector<Mask> saved;
            bool ok = true;
            for (auto w : g_.neighbors(pick)) {
                saved.push_back(dom[w]);
                if (col[w] == 0) {
                    dom[w] &= ~bit(c);
                    if (dom[w] == 0)
                        ok = false;
                }
            }
            col[pick] = c;
            if (ok && descend(dom, col, std::max(used, c)))
                return true;
            col[pick] = 0;
            std::size_t i = 0;
            for (auto w : g_.neighbors(pick))
                dom[w] = saved[i++];
        }
        return false;
    }

    const Graph& g_;
    Color k_;
    NodeCounter& counter_;
};

} // namespace

std::size_t clique_number(const Graph& g, const Budget& budget)
{
    if (g.vertex_count() > budget.clique_vertex_bound)
        throw BudgetExceeded("clique search limited to " + std::to_string(budget.clique_vertex_bound) +
                                 " vertices, graph has " + std::to_string(g.vertex_count()),
                             0);
    return max_clique(g, budget);
}

std::optional<Coloring> find_proper_coloring(const Graph& g, Color k, const Budget& budget)
{
    if (k == 0)
        return g.empty() ? std::optional<Coloring>(Coloring({}, 0)) : std::nullopt;
    if (k > 64)
        throw Error("palettes above 64 colors are not supported by the exact search");
    NodeCounter counter(budget.max_nodes, detail::deadline_after(budget.max_seconds));
    try {
        if (auto col = ColoringSearch(g, k, counter).run())
            return Coloring(std::move(*col), k);
        return std::nullopt;
    } catch (const detail::NodeLimitHit&) {
        throw BudgetExceeded("node budget exhausted in coloring search", budget.max_nodes);
    } catch (const detail::DeadlineHit&) {
        throw BudgetExceeded("time budget exhausted in coloring search", counter.nodes());
    }
}

std::size_t chromatic_number(const Graph& g, const Budget& budget)
{
    if (g.empty())
        return 0;
    for (auto k = static_cast<Color>(max_clique(g, budget));; ++k)
        if (find_proper_coloring(g, k, budget))
            return k;
}

SearchReport b_chromatic_number(const Graph& g, const Budget& budget)
{
    auto start = detail::Clock::now();
    SearchReport report;
    report.budget = budget;
    auto remaining = budget;
    for (auto k = static_cast<Color>(m_degree(g)); k >= 1; --k) {
        SearchStats stats;
        std::optional<BColoringCertificate> cert;
        try {
            remaining.max_seconds =
                budget.max_seconds - std::chrono::duration<double>(detail::Clock::now() - start).count();
            cert = has_b_coloring(g, k, remaining, &stats);
        } catch (const BudgetExceeded& e) {
            report.per_k_outcomes[k] = KOutcome::BudgetExceeded;
            throw SearchBudgetExceeded(e.what(), report.nodes_explored + e.nodes(), report.per_k_outcomes);
        }
        report.nodes_explored += stats.nodes;
        remaining.max_nodes -= stats.nodes;
        if (cert) {
            report.per_k_outcomes[k] = KOutcome::Found;
            report.phi = k;
            report.witness = std::move(*cert);
            break;
        }
        report.per_k_outcomes[k] = KOutcome::Exhausted;
    }
    report.elapsed = detail::Clock::now() - start;
    return report;
}

} // namespace bchroma
