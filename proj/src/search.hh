#pragma once

#include <iop/graph.hh>

#include <atomic>
#include <cstdint>
#include <vector>

namespace iop::detail {

/**
 * Incremental state of a backtracking search over edge directions.
 *
 * Edges are assigned in a fixed order. After each assignment the two
 * endpoints, and the neighbours of any endpoint that just became finished
 * (all incident edges assigned), are checked:
 *   - a finished vertex must differ from its finished neighbours;
 *   - an unfinished vertex must still reach some value in [-k, k] that no
 *     finished neighbour already holds.
 */
class PartialOrientation {
public:
    PartialOrientation(const Graph & g, int width, std::vector<int> order);

    int depth() const { return depth_; }
    int edge_count() const { return static_cast<int>(order_.size()); }

    /// Assigns the next edge in order. Always advances; returns whether the
    /// state is still consistent. Call undo() to retract either way.
    bool assign_next(bool forward);
    void undo();

    /// Directions of the first depth() edges in search order.
    std::vector<bool> prefix() const;
    Orientation orientation() const;

private:
    bool viable(int x) const;
    bool consistent(int e) const;

    const Graph * graph_;
    int width_;
    std::vector<int> order_;
    std::vector<int> value_;
    std::vector<int> remaining_;
    std::vector<bool> forward_;
    int depth_ = 0;
};

/// Node accounting, optionally shared between workers.
class NodeBudget {
public:
    explicit NodeBudget(std::uint64_t limit, std::atomic<std::uint64_t> * shared = nullptr, const std::atomic<bool> * stop = nullptr) :
        limit_(limit), shared_(shared), stop_(stop)
    {
    }

    /// Counts one node; false once the budget is spent or a stop was requested.
    bool charge();

    /// Pushes locally counted nodes into the shared counter.
    void flush();

    std::uint64_t used() const { return local_total_; }

private:
    static constexpr std::uint64_t batch = 1024;

    std::uint64_t limit_;
    std::atomic<std::uint64_t> * shared_;
    const std::atomic<bool> * stop_;
    std::uint64_t local_total_ = 0;
    std::uint64_t unflushed_ = 0;
};

enum class SearchStatus { Stopped, Exhausted, OutOfBudget };

/// Called with the state at target depth; return false to stop.
template <typename F>
SearchStatus run_search(PartialOrientation & state, int target_depth, bool forward_only_at_zero, NodeBudget & budget, F && on_leaf)
{
    const int base = state.depth();
    if (base == target_depth)
        return on_leaf(state) ? SearchStatus::Exhausted : SearchStatus::Stopped;

    // tried[level - base] = number of directions already tried at that level
    std::vector<std::uint8_t> tried(target_depth - base + 1, 0);
    int level = base;
    while (true) {
        auto & t = tried[level - base];
        int limit = (level == 0 && forward_only_at_zero) ? 1 : 2;
        if (t == limit) {
            t = 0;
            if (level == base)
                return SearchStatus::Exhausted;
            --level;
            state.undo();
            continue;
        }
        bool forward = (t == 0);
        ++t;
        if (! budget.charge())
            return SearchStatus::OutOfBudget;
        if (! state.assign_next(forward)) {
            state.undo();
            continue;
        }
        if (level + 1 == target_depth) {
            bool go_on = on_leaf(state);
            state.undo();
            if (! go_on)
                return SearchStatus::Stopped;
            continue;
        }
        ++level;
    }
}

}  // namespace iop::detail
