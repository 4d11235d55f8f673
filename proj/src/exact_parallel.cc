#include <iop/errors.hh>
#include <iop/exact.hh>

#include "search.hh"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <string>

namespace iop {

using detail::NodeBudget;
using detail::PartialOrientation;
using detail::run_search;
using detail::SearchStatus;
using std::vector;

namespace {
    struct Frontier {
        vector<vector<bool>> prefixes;
        std::uint64_t nodes = 0;
        bool out_of_budget = false;
    };

    // All consistent assignments of the first `depth` edges, in search order.
    Frontier expand_frontier(const Graph & g, int k, const vector<int> & order, int depth, bool forward_only_at_zero, std::uint64_t budget)
    {
        Frontier frontier;
        PartialOrientation state(g, k, order);
        NodeBudget nodes(budget);
        auto status = run_search(state, depth, forward_only_at_zero, nodes, [&](const PartialOrientation & s) {
            frontier.prefixes.push_back(s.prefix());
            return true;
        });
        frontier.nodes = nodes.used();
        frontier.out_of_budget = (status == SearchStatus::OutOfBudget);
        return frontier;
    }

    int split_depth(const Graph & g, int workers)
    {
        int depth = 6;
        for (int w = 1; w < workers; w *= 2)
            ++depth;
        return std::min(depth, g.size());
    }

    void replay(PartialOrientation & state, const vector<bool> & prefix)
    {
        for (bool forward : prefix)
            state.assign_next(forward);
    }
}

Verdict decide_width_parallel(const Graph & g, int k, std::uint64_t budget, int workers)
{
    if (k < 0)
        throw PreconditionError("width must be non-negative");

    Verdict verdict;
    verdict.width = k;
    auto order = search_order(g);
    auto frontier = expand_frontier(g, k, order, split_depth(g, workers), true, budget);
    if (frontier.out_of_budget) {
        verdict.kind = VerdictKind::BudgetExceeded;
        verdict.nodes = frontier.nodes;
        return verdict;
    }

    const int count = static_cast<int>(frontier.prefixes.size());
    std::atomic<std::uint64_t> shared_nodes{frontier.nodes};
    std::atomic<bool> found{false}, exhausted_budget{false};
    int winner = count;
    Orientation certificate;

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (int i = 0; i < count; ++i) {
        if (found.load(std::memory_order_relaxed) || exhausted_budget.load(std::memory_order_relaxed))
            continue;
        PartialOrientation state(g, k, order);
        replay(state, frontier.prefixes[i]);
        NodeBudget nodes(budget, &shared_nodes, &found);
        std::optional<Orientation> local;
        auto status = run_search(state, g.size(), false, nodes, [&](const PartialOrientation & s) {
            local = s.orientation();
            return false;
        });
        nodes.flush();
        if (status == SearchStatus::Stopped) {
#pragma omp critical(iop_decide_winner)
            {
                if (i < winner) {
                    winner = i;
                    certificate = *local;
                }
            }
            found.store(true, std::memory_order_relaxed);
        }
        else if (status == SearchStatus::OutOfBudget && ! found.load(std::memory_order_relaxed))
            exhausted_budget.store(true, std::memory_order_relaxed);
    }

    verdict.nodes = shared_nodes.load();
    if (found.load()) {
        verdict.kind = VerdictKind::Feasible;
        verdict.certificate = std::move(certificate);
    }
    else if (exhausted_budget.load())
        verdict.kind = VerdictKind::BudgetExceeded;
    else
        verdict.kind = VerdictKind::Infeasible;
    return verdict;
}

vector<Orientation> collect_proper_parallel(const Graph & g, int k, std::uint64_t budget, int workers)
{
    if (k < 0)
        throw PreconditionError("width must be non-negative");

    vector<int> order(g.size());
    for (int e = 0; e < g.size(); ++e)
        order[e] = e;

    auto frontier = expand_frontier(g, k, order, split_depth(g, workers), false, budget);
    if (frontier.out_of_budget)
        throw BudgetExceeded("enumeration exceeded " + std::to_string(budget) + " nodes");

    // Prefixes come out in lexicographic order, so concatenating the shards
    // in prefix order reproduces the serial sequence.
    const int count = static_cast<int>(frontier.prefixes.size());
    vector<vector<Orientation>> shards(count);
    std::atomic<std::uint64_t> shared_nodes{frontier.nodes};
    std::atomic<bool> exhausted_budget{false};

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (int i = 0; i < count; ++i) {
        if (exhausted_budget.load(std::memory_order_relaxed))
            continue;
        PartialOrientation state(g, k, order);
        replay(state, frontier.prefixes[i]);
        NodeBudget nodes(budget, &shared_nodes, &exhausted_budget);
        auto status = run_search(state, g.size(), false, nodes, [&](const PartialOrientation & s) {
            shards[i].push_back(s.orientation());
            return true;
        });
        nodes.flush();
        if (status == SearchStatus::OutOfBudget)
            exhausted_budget.store(true, std::memory_order_relaxed);
    }
    if (exhausted_budget.load())
        throw BudgetExceeded("enumeration exceeded " + std::to_string(budget) + " nodes");

    vector<Orientation> result;
    for (auto & shard : shards)
        for (auto & d : shard)
            result.push_back(std::move(d));
    return result;
}

}  // namespace iop
