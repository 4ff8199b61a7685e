#pragma once

#include "bchroma/coloring.hpp"
#include "bchroma/error.hpp"
#include "bchroma/graph.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace bchroma {

/// Limits shared by every exact search. The node budget is deterministic; the
/// wall-clock budget is a safety net and may cut runs at different points.
struct Budget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 300.0;
    unsigned workers = 1;
    /// count_b_colorings refuses graphs with k^|V| above this bound.
    std::uint64_t max_assignments = 1'000'000'000'000ULL;
    /// clique_number refuses graphs with more vertices than this.
    std::size_t clique_vertex_bound = 64;

    /// Defaults, with max_nodes overridden by BCHROMA_MAX_NODES when set.
    static Budget from_environment();
};

enum class KOutcome { Found, Exhausted, BudgetExceeded };

std::string to_string(KOutcome outcome);

struct SearchReport {
    Color phi = 0;
    BColoringCertificate witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{};
    /// Outcome for every k tried, from m_degree downwards.
    std::map<Color, KOutcome> per_k_outcomes;
    Budget budget;
};

enum class CountMode {
    /// Every color of [1..k] is used and has a b-vertex.
    ExactPalette,
    /// Colors drawn from [1..k]; the colors actually used form a b-coloring.
    WithinPalette,
};

std::string to_string(CountMode mode);

struct CountReport {
    CountMode mode = CountMode::ExactPalette;
    Color k = 0;
    std::uint64_t count = 0;
    /// k^|V|.
    std::uint64_t total_assignments = 0;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{};

    double probability() const { return static_cast<double>(count) / static_cast<double>(total_assignments); }
    /// Probability as a percentage with the given number of decimals, e.g. "0.0610".
    std::string probability_percent(int decimals = 4) const;
};

/// Raised by b_chromatic_number; carries the outcomes decided before the budget ran out.
class SearchBudgetExceeded : public BudgetExceeded {
public:
    SearchBudgetExceeded(const std::string& message, std::uint64_t nodes, std::map<Color, KOutcome> per_k)
        : BudgetExceeded(message, nodes), per_k_outcomes_(std::move(per_k))
    {
    }

    const std::map<Color, KOutcome>& per_k_outcomes() const noexcept { return per_k_outcomes_; }

private:
    std::map<Color, KOutcome> per_k_outcomes_;
};

/// Raised by count_b_colorings; partial_count() is a lower bound on B(G,k).
class CountBudgetExceeded : public BudgetExceeded {
public:
    CountBudgetExceeded(const std::string& message, std::uint64_t nodes, std::uint64_t partial)
        : BudgetExceeded(message, nodes), partial_(partial)
    {
    }

    std::uint64_t partial_count() const noexcept { return partial_; }

private:
    std::uint64_t partial_;
};

/// Largest i such that the i-th largest degree is at least i-1.
std::size_t m_degree(const Graph& g);

/// Exact maximum clique size. Throws BudgetExceeded past the vertex bound or node budget.
std::size_t clique_number(const Graph& g, const Budget& budget = {});

/// Exact chromatic number by iterative deepening from the clique number.
std::size_t chromatic_number(const Graph& g, const Budget& budget = {});

/// A proper coloring with at most k colors, if one exists.
std::optional<Coloring> find_proper_coloring(const Graph& g, Color k, const Budget& budget = {});

struct SearchStats {
    std::uint64_t nodes = 0;
};

/// Complete search for a b-coloring with exactly k colors. Returns nullopt
/// when none exists (including every k above m_degree). Throws
/// BudgetExceeded when the search could not finish. The certificate returned
/// is the first in search order and does not depend on budget.workers.
std::optional<BColoringCertificate> has_b_coloring(const Graph& g, Color k, const Budget& budget = {},
                                                   SearchStats* stats = nullptr);

/// Tests every k from m_degree(g) downwards and stops at the first that admits
/// a b-coloring. The node budget covers the whole call.
SearchReport b_chromatic_number(const Graph& g, const Budget& budget = {});

/// Number of assignments V -> [1..k] that are b-colorings with all k colors,
/// colors distinguishable.
CountReport count_b_colorings(const Graph& g, Color k, const Budget& budget = {});

/// Assignments V -> [1..k] that are b-colorings of the set of colors they use,
/// computed as the sum over j of C(k,j) * B(G,j).
CountReport count_b_colorings_within_palette(const Graph& g, Color k, const Budget& budget = {});

} // namespace bchroma
