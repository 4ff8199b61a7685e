#include "bchroma/solver.hpp"

#include "search_support.hpp"

#include <stdexcept>

namespace bchroma {

namespace {

using detail::bit;
using detail::lowest_color;
using detail::Mask;
using detail::NodeCounter;
using detail::single;

constexpr Vertex none = static_cast<Vertex>(-1);

// Partial assignment. A vertex is assigned once its color is fixed; its domain
// is then the singleton of that color.
struct State {
    std::vector<Mask> dom;
    std::vector<Color> col;
    // b[c-1] is the chosen b-vertex of color c, or none.
    std::vector<Vertex> b;
};

// Existence search. The k b-vertices are picked first, in increasing vertex
// order with b_c receiving color c, which is a relabeling of any b-coloring's
// representatives. Unmet neighbourhood demands of the chosen b-vertices are
// then closed one at a time, and the rest is completed to a proper coloring.
class ExistenceSearch {
public:
    ExistenceSearch(const Graph& g, Color k) : g_(g), k_(k), full_(detail::full_mask(k))
    {
        const auto n = g.vertex_count();
        candidate_.assign(n, false);
        for (Vertex v = 0; v < n; ++v)
            candidate_[v] = g.degree(v) + 1 >= k;
        suffix_.assign(n + 1, 0);
        for (Vertex v = n; v-- > 0;)
            suffix_[v] = suffix_[v + 1] + (candidate_[v] ? 1 : 0);
    }

    State initial() const
    {
        const auto n = g_.vertex_count();
        return {std::vector<Mask>(n, full_), std::vector<Color>(n, 0), std::vector<Vertex>(k_, none)};
    }

    /// Candidates for the color-1 b-vertex; these are the first-level branches.
    std::vector<Vertex> first_choices() const
    {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < g_.vertex_count(); ++v)
            if (candidate_[v] && suffix_[v] >= k_)
                out.push_back(v);
        return out;
    }

    std::optional<BColoringCertificate> run_from(Vertex first, NodeCounter& counter)
    {
        counter_ = &counter;
        auto s = initial();
        if (!choose_b(s, 1, first))
            return std::nullopt;
        return select(std::move(s), 2, first + 1);
    }

private:
    bool assign(State& s, Vertex v, Color c) const
    {
        if (!(s.dom[v] & bit(c)))
            return false;
        std::vector<std::pair<Vertex, Color>> pending{{v, c}};
        while (!pending.empty()) {
            auto [x, cx] = pending.back();
            pending.pop_back();
            if (s.col[x] == cx)
                continue;
            if (!(s.dom[x] & bit(cx)))
                return false;
            s.col[x] = cx;
            s.dom[x] = bit(cx);
            for (auto w : g_.neighbors(x)) {
                if (!(s.dom[w] & bit(cx)))
                    continue;
                s.dom[w] &= ~bit(cx);
                if (s.dom[w] == 0)
                    return false;
                if (s.col[w] == 0 && single(s.dom[w]))
                    pending.emplace_back(w, lowest_color(s.dom[w]));
            }
        }
        return true;
    }

    bool remove(State& s, Vertex v, Color c) const
    {
        if (!(s.dom[v] & bit(c)))
            return true;
        if (s.col[v] == c)
            return false;
        s.dom[v] &= ~bit(c);
        if (s.dom[v] == 0)
            return false;
        if (single(s.dom[v]))
            return assign(s, v, lowest_color(s.dom[v]));
        return true;
    }

    Mask seen_colors(const State& s, Vertex v) const
    {
        Mask seen = 0;
        for (auto w : g_.neighbors(v))
            if (s.col[w] != 0)
                seen |= bit(s.col[w]);
        return seen;
    }

    // Hall check: the colors b still misses must be matched to distinct
    // unassigned neighbours able to take them.
    bool demands_satisfiable(const State& s, Vertex b, Color c) const
    {
        Mask unmet = full_ & ~bit(c) & ~seen_colors(s, b);
        if (unmet == 0)
            return true;
        std::vector<Vertex> free;
        Mask reach = 0;
        for (auto w : g_.neighbors(b)) {
            if (s.col[w] == 0 && (s.dom[w] & unmet)) {
                free.push_back(w);
                reach |= s.dom[w];
            }
        }
        if ((reach & unmet) != unmet || free.size() < static_cast<std::size_t>(std::popcount(unmet)))
            return false;

        std::vector<Color> colors;
        for (Mask m = unmet; m != 0; m &= m - 1)
            colors.push_back(lowest_color(m));
        std::vector<int> owner(free.size(), -1);
        std::vector<char> visited(free.size());
        auto augment = [&](auto&& self, int ci) -> bool {
            for (std::size_t j = 0; j < free.size(); ++j) {
                if (visited[j] || !(s.dom[free[j]] & bit(colors[static_cast<std::size_t>(ci)])))
                    continue;
                visited[j] = 1;
                if (owner[j] < 0 || self(self, owner[j])) {
                    owner[j] = ci;
                    return true;
                }
            }
            return false;
        };
        for (std::size_t ci = 0; ci < colors.size(); ++ci) {
            std::fill(visited.begin(), visited.end(), 0);
            if (!augment(augment, static_cast<int>(ci)))
                return false;
        }
        return true;
    }

    bool all_demands_satisfiable(const State& s) const
    {
        for (Color c = 1; c <= k_; ++c)
            if (s.b[c - 1] != none && !demands_satisfiable(s, s.b[c - 1], c))
                return false;
        return true;
    }

    // Every color still without a b-vertex needs a candidate after `from`
    // that may take it and whose neighbourhood can still show all other colors.
    bool future_b_possible(const State& s, Color next, Vertex from) const
    {
        if (next > k_)
            return true;
        Mask needed = 0;
        for (Color c = next; c <= k_; ++c)
            needed |= bit(c);
        Mask possible = 0;
        for (Vertex v = from; v < g_.vertex_count() && possible != needed; ++v) {
            if (!candidate_[v])
                continue;
            Mask around = 0;
            for (auto w : g_.neighbors(v))
                around |= s.dom[w];
            Mask missing = full_ & ~around;
            Mask own = s.dom[v] & needed;
            if (missing == 0)
                possible |= own;
            else if (single(missing))
                possible |= own & missing;
        }
        return possible == needed;
    }

    bool choose_b(State& s, Color c, Vertex v) const
    {
        if (!assign(s, v, c))
            return false;
        s.b[c - 1] = v;
        return all_demands_satisfiable(s);
    }

    std::optional<BColoringCertificate> select(State s, Color next, Vertex from)
    {
        counter_->tick();
        if (next > k_)
            return close_demands(std::move(s));
        if (!future_b_possible(s, next, from))
            return std::nullopt;
        const Color remaining = k_ - next + 1;
        for (Vertex v = from; v < g_.vertex_count() && suffix_[v] >= remaining; ++v) {
            if (!candidate_[v] || !(s.dom[v] & bit(next)))
                continue;
            auto child = s;
            if (!choose_b(child, next, v))
                continue;
            if (auto found = select(std::move(child), next + 1, v + 1))
                return found;
        }
        return std::nullopt;
    }

    std::optional<BColoringCertificate> close_demands(State s)
    {
        counter_->tick();
        // Unmet demand with the fewest supporters; ties go to the lowest color pair.
        Vertex best_b = none;
        Color best_d = 0;
        std::size_t best_support = static_cast<std::size_t>(-1);
        for (Color c = 1; c <= k_ && best_support > 1; ++c) {
            auto b = s.b[c - 1];
            Mask unmet = full_ & ~bit(c) & ~seen_colors(s, b);
            for (Mask m = unmet; m != 0 && best_support > 1; m &= m - 1) {
                auto d = lowest_color(m);
                std::size_t support = 0;
                for (auto w : g_.neighbors(b))
                    if (s.col[w] == 0 && (s.dom[w] & bit(d)))
                        ++support;
                if (support < best_support) {
                    best_support = support;
                    best_b = b;
                    best_d = d;
                }
            }
        }
        if (best_b == none)
            return extend(std::move(s));
        if (best_support == 0)
            return std::nullopt;

        std::vector<Vertex> supporters;
        for (auto w : g_.neighbors(best_b))
            if (s.col[w] == 0 && (s.dom[w] & bit(best_d)))
                supporters.push_back(w);
        for (auto u : supporters) {
            // Propagation from excluding earlier supporters may have forced u.
            if (s.col[u] == best_d)
                return close_demands(std::move(s));
            if (!(s.dom[u] & bit(best_d)))
                continue;
            auto child = s;
            if (assign(child, u, best_d) && all_demands_satisfiable(child)) {
                if (auto found = close_demands(std::move(child)))
                    return found;
            }
            // Later branches may assume u does not take best_d.
            if (!remove(s, u, best_d) || !all_demands_satisfiable(s))
                return std::nullopt;
        }
        return std::nullopt;
    }

    std::optional<BColoringCertificate> extend(State s)
    {
        counter_->tick();
        Vertex pick = none;
        int best = 65;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (s.col[v] != 0)
                continue;
            int size = std::popcount(s.dom[v]);
            if (size < best) {
                best = size;
                pick = v;
            }
        }
        if (pick == none) {
            BColoringCertificate cert{Coloring(s.col, k_), s.b};
            return cert;
        }
        for (Mask m = s.dom[pick]; m != 0; m &= m - 1) {
            auto child = s;
            if (!assign(child, pick, lowest_color(m)))
                continue;
            if (auto found = extend(std::move(child)))
                return found;
        }
        return std::nullopt;
    }

    const Graph& g_;
    Color k_;
    Mask full_;
    std::vector<bool> candidate_;
    // suffix_[v] counts candidates with index >= v.
    std::vector<std::size_t> suffix_;
    NodeCounter* counter_ = nullptr;
};

} // namespace

std::optional<BColoringCertificate> has_b_coloring(const Graph& g, Color k, const Budget& budget, SearchStats* stats)
{
    if (k == 0)
        throw std::invalid_argument("b-coloring needs at least one color");
    if (g.empty())
        throw std::invalid_argument("b-coloring of the empty graph is undefined");
    if (stats)
        stats->nodes = 0;
    if (k > m_degree(g))
        return std::nullopt;
    if (k > 64)
        throw Error("palettes above 64 colors are not supported by the exact search");

    ExistenceSearch probe(g, k);
    auto firsts = probe.first_choices();
    std::optional<BColoringCertificate> found;
    auto fold = detail::fold_branches<BColoringCertificate>(
        firsts.size(), budget, detail::deadline_after(budget.max_seconds), true,
        [&](std::size_t i, NodeCounter& counter) {
            ExistenceSearch search(g, k);
            return search.run_from(firsts[i], counter);
        },
        [&](std::size_t, const BColoringCertificate& cert) { found = cert; });
    if (stats)
        stats->nodes = fold.nodes;
    if (fold.limit_hit)
        throw BudgetExceeded("node budget of " + std::to_string(budget.max_nodes) + " exhausted at k=" +
                                 std::to_string(k),
                             fold.nodes);
    if (fold.deadline_hit)
        throw BudgetExceeded("time budget exhausted at k=" + std::to_string(k), fold.nodes);
    return found;
}

} // namespace bchroma
