#include <iop/errors.hh>
#include <iop/exact.hh>

#include "search.hh"

#include <algorithm>
#include <string>

namespace iop {

using detail::NodeBudget;
using detail::PartialOrientation;
using detail::run_search;
using detail::SearchStatus;
using std::vector;

vector<int> search_order(const Graph & g)
{
    // Repeatedly pick a vertex and emit all of its unassigned edges, so that
    // it is finished immediately. Prefer touched vertices with few edges left
    // (they finish their neighbours soonest), then high degree.
    vector<int> order;
    order.reserve(g.size());
    vector<bool> emitted(g.size(), false), picked(g.order(), false);
    vector<int> left(g.order());
    for (int v = 0; v < g.order(); ++v)
        left[v] = g.degree(v);

    while (static_cast<int>(order.size()) < g.size()) {
        int best = -1;
        auto better = [&](int a, int b) {
            bool ta = left[a] < g.degree(a), tb = left[b] < g.degree(b);
            if (ta != tb)
                return ta;
            if (ta && left[a] != left[b])
                return left[a] < left[b];
            if (g.degree(a) != g.degree(b))
                return g.degree(a) > g.degree(b);
            return a < b;
        };
        for (int v = 0; v < g.order(); ++v)
            if (! picked[v] && left[v] > 0 && (best == -1 || better(v, best)))
                best = v;
        picked[best] = true;
        for (auto [w, e] : g.incident(best))
            if (! emitted[e]) {
                emitted[e] = true;
                order.push_back(e);
                --left[best];
                --left[w];
            }
    }
    return order;
}

Verdict decide_width_serial(const Graph & g, int k, std::uint64_t budget)
{
    if (k < 0)
        throw PreconditionError("width must be non-negative");

    Verdict verdict;
    verdict.width = k;
    PartialOrientation state(g, k, search_order(g));
    NodeBudget nodes(budget);

    auto status = run_search(state, g.size(), true, nodes, [&](const PartialOrientation & s) {
        verdict.certificate = s.orientation();
        return false;
    });

    verdict.nodes = nodes.used();
    switch (status) {
    case SearchStatus::Stopped: verdict.kind = VerdictKind::Feasible; break;
    case SearchStatus::Exhausted: verdict.kind = VerdictKind::Infeasible; break;
    case SearchStatus::OutOfBudget: verdict.kind = VerdictKind::BudgetExceeded; break;
    }
    if (verdict.kind != VerdictKind::Feasible)
        verdict.certificate.reset();
    return verdict;
}

Verdict decide_width(const Graph & g, int k, const SearchOptions & options)
{
    if (options.workers <= 1)
        return decide_width_serial(g, k, options.budget);
    return decide_width_parallel(g, k, options.budget, options.workers);
}

int in_out_lower_bound(const Graph & g)
{
    int parity = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) % 2 == 1)
            parity = 1;

    int chi;
    if (g.order() <= 16)
        chi = chromatic_number(g);
    else if (g.size() == 0)
        chi = 1;
    else
        chi = bipartition(g).bipartite() ? 2 : 3;

    // ceil((chi - 1) / 2) == floor(chi / 2)
    return std::max(chi / 2, parity);
}

InOutNumber in_out_number(const Graph & g, const SearchOptions & options)
{
    if (g.order() < 1)
        throw PreconditionError("in_out_number needs at least one vertex");

    std::uint64_t used = 0;
    for (int k = in_out_lower_bound(g); k <= g.max_degree(); ++k) {
        SearchOptions step = options;
        step.budget = options.budget - used;
        auto verdict = decide_width(g, k, step);
        used += verdict.nodes;
        if (verdict.kind == VerdictKind::BudgetExceeded)
            throw BudgetExceeded("budget of " + std::to_string(options.budget) + " nodes exhausted at width " + std::to_string(k));
        if (verdict.feasible())
            return InOutNumber{k, *verdict.certificate, used};
    }
    // Every graph has a proper orientation of width at most its maximum degree.
    throw std::logic_error("no in-out-proper orientation of width <= max degree found");
}

namespace {
    vector<int> identity_order(const Graph & g)
    {
        vector<int> order(g.size());
        for (int e = 0; e < g.size(); ++e)
            order[e] = e;
        return order;
    }
}

std::uint64_t enumerate_proper(const Graph & g, int k, const ProperVisitor & visit, std::uint64_t budget)
{
    if (k < 0)
        throw PreconditionError("width must be non-negative");
    PartialOrientation state(g, k, identity_order(g));
    NodeBudget nodes(budget);
    auto status = run_search(state, g.size(), false, nodes, [&](const PartialOrientation & s) { return visit(s.orientation()); });
    if (status == SearchStatus::OutOfBudget)
        throw BudgetExceeded("enumeration exceeded " + std::to_string(budget) + " nodes");
    return nodes.used();
}

vector<Orientation> collect_proper(const Graph & g, int k, std::uint64_t budget)
{
    vector<Orientation> result;
    enumerate_proper(
        g, k, [&](const Orientation & d) {
            result.push_back(d);
            return true;
        },
        budget);
    return result;
}

}  // namespace iop
