#include "bchroma/solver.hpp"

#include "search_support.hpp"

#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bchroma {

namespace {

using detail::bit;
using detail::Mask;
using detail::NodeCounter;
using detail::single;

// Labeled enumeration with forward checking. No color symmetry is broken, so
// every b-coloring is reached exactly once. A branch is cut when some color
// has no vertex left that could still become its b-vertex.
class Counter {
public:
    Counter(const Graph& g, Color k) : n_(g.vertex_count()), k_(k), full_(detail::full_mask(k))
    {
        // Order vertices so that each one has as many earlier neighbours as possible.
        std::vector<bool> placed(n_, false);
        std::vector<std::size_t> links(n_, 0);
        for (std::size_t step = 0; step < n_; ++step) {
            Vertex pick = 0;
            bool have = false;
            for (Vertex v = 0; v < n_; ++v) {
                if (placed[v])
                    continue;
                if (!have || links[v] > links[pick] || (links[v] == links[pick] && g.degree(v) > g.degree(pick))) {
                    pick = v;
                    have = true;
                }
            }
            placed[pick] = true;
            order_.push_back(pick);
            for (auto w : g.neighbors(pick))
                ++links[w];
        }
        neighbors_.resize(n_);
        for (Vertex v = 0; v < n_; ++v)
            neighbors_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
        stack_.assign((n_ + 1) * n_, full_);
    }

    std::uint64_t run_from(Color first, NodeCounter& counter)
    {
        counter_ = &counter;
        std::fill(stack_.begin(), stack_.begin() + static_cast<std::ptrdiff_t>(n_), full_);
        if (n_ == 0)
            return 0;
        counter_->tick();
        Mask* child = &stack_[n_];
        std::copy(stack_.begin(), stack_.begin() + static_cast<std::ptrdiff_t>(n_), child);
        if (!place(child, order_[0], first) || !b_feasible(child))
            return 0;
        return descend(1);
    }

private:
    bool place(Mask* dom, Vertex v, Color c) const
    {
        if (!(dom[v] & bit(c)))
            return false;
        dom[v] = bit(c);
        for (auto w : neighbors_[v]) {
            dom[w] &= ~bit(c);
            if (dom[w] == 0)
                return false;
        }
        return true;
    }

    // Each color needs a vertex that may take it and whose neighbours may
    // still show every other color.
    bool b_feasible(const Mask* dom) const
    {
        Mask covered = 0;
        for (Vertex v = 0; v < n_; ++v) {
            Mask around = 0;
            for (auto w : neighbors_[v])
                around |= dom[w];
            Mask missing = full_ & ~around;
            if (missing == 0)
                covered |= dom[v];
            else if (single(missing))
                covered |= dom[v] & missing;
            if (covered == full_)
                return true;
        }
        return false;
    }

    std::uint64_t descend(std::size_t depth)
    {
        if (depth == n_)
            return 1;
        const Mask* dom = &stack_[depth * n_];
        Mask* child = &stack_[(depth + 1) * n_];
        auto v = order_[depth];
        std::uint64_t total = 0;
        for (Mask m = dom[v]; m != 0; m &= m - 1) {
            counter_->tick();
            std::copy(dom, dom + n_, child);
            if (!place(child, v, detail::lowest_color(m)) || !b_feasible(child))
                continue;
            total += descend(depth + 1);
        }
        return total;
    }

    std::size_t n_;
    Color k_;
    Mask full_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> neighbors_;
    // Domain arrays for every depth, n_ masks each.
    std::vector<Mask> stack_;
    NodeCounter* counter_ = nullptr;
};

// k^n, saturating at the maximum uint64.
std::uint64_t power_saturating(std::uint64_t k, std::size_t n)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (k != 0 && total > std::numeric_limits<std::uint64_t>::max() / k)
            return std::numeric_limits<std::uint64_t>::max();
        total *= k;
    }
    return total;
}

} // namespace

std::string CountReport::probability_percent(int decimals) const
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(decimals) << probability() * 100.0;
    return out.str();
}

std::string to_string(CountMode mode)
{
    return mode == CountMode::ExactPalette ? "exact-palette" : "within-palette";
}

CountReport count_b_colorings(const Graph& g, Color k, const Budget& budget)
{
    if (k == 0)
        throw std::invalid_argument("counting needs at least one color");
    if (g.empty())
        throw std::invalid_argument("counting b-colorings of the empty graph is undefined");
    if (k > 64)
        throw Error("palettes above 64 colors are not supported by the exact search");

    auto start = detail::Clock::now();
    CountReport report;
    report.k = k;
    report.total_assignments = power_saturating(k, g.vertex_count());
    if (report.total_assignments > budget.max_assignments)
        throw CountBudgetExceeded(std::to_string(k) + "^" + std::to_string(g.vertex_count()) +
                                      " assignments exceed the enumeration bound of " +
                                      std::to_string(budget.max_assignments),
                                  0, 0);
    if (k > m_degree(g)) {
        report.elapsed = detail::Clock::now() - start;
        return report;
    }

    std::uint64_t total = 0;
    auto fold = detail::fold_branches<std::uint64_t>(
        k, budget, detail::deadline_after(budget.max_seconds), false,
        [&](std::size_t i, NodeCounter& counter) -> std::optional<std::uint64_t> {
            Counter c(g, k);
            return c.run_from(static_cast<Color>(i + 1), counter);
        },
        [&](std::size_t, std::uint64_t branch) { total += branch; });
    if (fold.limit_hit || fold.deadline_hit)
        throw CountBudgetExceeded(std::string(fold.limit_hit ? "node" : "time") + " budget exhausted while counting; " +
                                      std::to_string(total) + " b-colorings found so far",
                                  fold.nodes, total);
    report.count = total;
    report.nodes_explored = fold.nodes;
    report.elapsed = detail::Clock::now() - start;
    return report;
}

CountReport count_b_colorings_within_palette(const Graph& g, Color k, const Budget& budget)
{
    if (k == 0)
        throw std::invalid_argument("counting needs at least one color");
    auto start = detail::Clock::now();
    CountReport report;
    report.mode = CountMode::WithinPalette;
    report.k = k;
    report.total_assignments = power_saturating(k, g.vertex_count());
    if (report.total_assignments > budget.max_assignments)
        throw CountBudgetExceeded(std::to_string(k) + "^" + std::to_string(g.vertex_count()) +
                                      " assignments exceed the enumeration bound of " +
                                      std::to_string(budget.max_assignments),
                                  0, 0);
    const auto top = std::min<std::size_t>(k, m_degree(g));
    auto remaining = budget;
    std::uint64_t binomial = k; // C(k, j), starting at j = 1
    for (Color j = 1; j <= top; ++j) {
        if (j > 1)
            binomial = binomial * (k - j + 1) / j;
        CountReport part;
        try {
            part = count_b_colorings(g, j, remaining);
        } catch (const CountBudgetExceeded& e) {
            throw CountBudgetExceeded(e.what(), report.nodes_explored + e.nodes(),
                                      report.count + binomial * e.partial_count());
        }
        report.count += binomial * part.count;
        report.nodes_explored += part.nodes_explored;
        remaining.max_nodes -= part.nodes_explored;
    }
    report.elapsed = detail::Clock::now() - start;
    return report;
}

} // namespace bchroma
