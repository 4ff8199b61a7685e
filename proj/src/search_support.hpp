#pragma once

#include "bchroma/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace bchroma::detail {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

inline Mask bit(Color c) { return Mask{1} << (c - 1); }
inline Mask full_mask(Color k) { return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1; }
inline Color lowest_color(Mask m) { return static_cast<Color>(std::countr_zero(m)) + 1; }
inline bool single(Mask m) { return m != 0 && (m & (m - 1)) == 0; }

struct NodeLimitHit {};
struct DeadlineHit {};
struct Cancelled {};

/// Per-branch node counter. Throws NodeLimitHit once more than `limit` nodes
/// were opened, DeadlineHit past the deadline or when `abort` is raised, and
/// Cancelled once `cutoff` drops below this branch's index.
class NodeCounter {
public:
    NodeCounter(std::uint64_t limit, Clock::time_point deadline, const std::atomic<bool>* abort = nullptr,
                const std::atomic<std::size_t>* cutoff = nullptr, std::size_t index = 0)
        : limit_(limit), deadline_(deadline), abort_(abort), cutoff_(cutoff), index_(index)
    {
    }

    void tick()
    {
        if (++nodes_ > limit_)
            throw NodeLimitHit{};
        if ((nodes_ & 1023) == 0) {
            if (Clock::now() > deadline_ || (abort_ && abort_->load(std::memory_order_relaxed)))
                throw DeadlineHit{};
            if (cutoff_ && cutoff_->load(std::memory_order_relaxed) < index_)
                throw Cancelled{};
        }
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_ = 0;
    std::uint64_t limit_;
    Clock::time_point deadline_;
    const std::atomic<bool>* abort_;
    const std::atomic<std::size_t>* cutoff_;
    std::size_t index_;
};

inline Clock::time_point deadline_after(double seconds)
{
    auto d = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
    return Clock::now() + d;
}

template <typename T>
struct BranchOutcome {
    std::optional<T> value;
    std::uint64_t nodes = 0;
    bool limit_hit = false;
    bool deadline_hit = false;
    bool cancelled = false;
};

template <typename T, typename F>
BranchOutcome<T> run_branch(F& f, std::size_t index, NodeCounter counter)
{
    BranchOutcome<T> out;
    try {
        out.value = f(index, counter);
    } catch (const NodeLimitHit&) {
        out.limit_hit = true;
    } catch (const DeadlineHit&) {
        out.deadline_hit = true;
    } catch (const Cancelled&) {
        out.cancelled = true;
    }
    out.nodes = counter.nodes();
    return out;
}

struct FoldResult {
    std::uint64_t nodes = 0;
    bool limit_hit = false;
    bool deadline_hit = false;
    /// Index of the first branch returning a value, in existence mode.
    std::optional<std::size_t> hit;
};

/// Evaluates branches 0..count-1 and folds them in branch order.
///
/// f(index, counter) returns std::optional<T>. In existence mode
/// (`stop_at_first`) the fold stops at the first branch returning a value.
/// Branch i is charged against the budget left after branches 0..i-1, so the
/// folded result is the same for any worker count. on_branch(i, value) is
/// called in branch order for each completed branch that fits the budget.
template <typename T, typename F, typename OnBranch>
FoldResult fold_branches(std::size_t count, const Budget& budget, Clock::time_point deadline, bool stop_at_first,
                         F&& f, OnBranch&& on_branch)
{
    FoldResult result;
    const auto max_nodes = budget.max_nodes;
    const unsigned workers = std::max(1U, budget.workers);

    // Returns true when the fold is decided at this branch.
    auto absorb = [&](std::size_t i, BranchOutcome<T>& out) {
        if (out.limit_hit || result.nodes + out.nodes > max_nodes) {
            result.limit_hit = true;
            result.nodes = max_nodes;
            return true;
        }
        result.nodes += out.nodes;
        if (out.deadline_hit || out.cancelled) {
            result.deadline_hit = true;
            return true;
        }
        if (out.value) {
            on_branch(i, *out.value);
            if (stop_at_first) {
                result.hit = i;
                return true;
            }
        }
        return false;
    };

    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            auto out = run_branch<T>(f, i, NodeCounter(max_nodes - result.nodes, deadline));
            if (absorb(i, out))
                return result;
        }
        return result;
    }

    std::vector<BranchOutcome<T>> outcomes(count);
    std::vector<char> ran(count, 0);
    std::atomic<std::size_t> next{0};
    // Branches past the cutoff cannot influence the fold any more.
    std::atomic<std::size_t> cutoff{count};
    std::atomic<bool> abort{false};

    auto lower_cutoff = [&](std::size_t i) {
        auto current = cutoff.load();
        while (i < current && !cutoff.compare_exchange_weak(current, i)) {
        }
    };
    auto worker = [&] {
        for (;;) {
            auto i = next.fetch_add(1);
            if (i >= count || i > cutoff.load() || abort.load())
                return;
            auto out = run_branch<T>(f, i, NodeCounter(max_nodes, deadline, &abort, &cutoff, i));
            if (out.limit_hit || (stop_at_first && out.value))
                lower_cutoff(i);
            if (out.deadline_hit)
                abort = true;
            outcomes[i] = std::move(out);
            ran[i] = 1;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    for (std::size_t i = 0; i < count; ++i) {
        auto& out = outcomes[i];
        if (!ran[i]) {
            result.deadline_hit = true;
            return result;
        }
        if (absorb(i, out))
            return result;
    }
    return result;
}

} // namespace bchroma::detail
