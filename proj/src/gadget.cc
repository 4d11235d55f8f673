#include <iop/errors.hh>
#include <iop/reductions.hh>

#include <omp.h>

#include <algorithm>
#include <limits>
#include <string>

namespace iop {

using std::string;
using std::to_string;
using std::vector;

namespace {
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();

    Orientation from_mask(const Graph & g, std::uint64_t mask)
    {
        vector<bool> forward(g.size());
        for (int e = 0; e < g.size(); ++e)
            forward[e] = (mask >> e) & 1;
        return Orientation(g, std::move(forward));
    }

    string structural_defect(const Graph & g, const std::array<int, 3> & terminals)
    {
        for (int t : terminals)
            if (t < 0 || t >= g.order())
                return "terminal " + to_string(t) + " is not a vertex";
        if (terminals[0] == terminals[1] || terminals[0] == terminals[2] || terminals[1] == terminals[2])
            return "terminals are not distinct";
        for (int t : terminals)
            if (g.degree(t) != 1)
                return "terminal " + to_string(t) + " has degree " + to_string(g.degree(t));
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) != 1 && g.degree(v) != 3)
                return "vertex " + to_string(v) + " has degree " + to_string(g.degree(v));
        auto sides = bipartition(g);
        if (! sides.bipartite())
            return "not bipartite";
        if (sides.side[terminals[0]] != sides.side[terminals[1]] || sides.side[terminals[0]] != sides.side[terminals[2]])
            return "terminals lie on different sides";
        return {};
    }

    // 0: rejected, 1: survives with terminals at -1, 2: at +1, 3: mixed.
    int classify(const Graph & g, const vector<bool> & terminal_edge, const std::array<int, 3> & terminals, std::uint64_t mask, vector<int> & value)
    {
        std::fill(value.begin(), value.end(), 0);
        for (int e = 0; e < g.size(); ++e) {
            auto [u, v] = g.edge(e);
            if ((mask >> e) & 1) {
                --value[u];
                ++value[v];
            }
            else {
                ++value[u];
                --value[v];
            }
        }
        for (int x : value)
            if (x > 1 || x < -1)
                return 0;
        for (int e = 0; e < g.size(); ++e)
            if (! terminal_edge[e] && value[g.edge(e).u] == value[g.edge(e).v])
                return 0;
        int a = value[terminals[0]], b = value[terminals[1]], c = value[terminals[2]];
        if (a != b || a != c)
            return 3;
        return a < 0 ? 1 : 2;
    }
}

GadgetReport verify_gadget(const Graph & candidate, std::array<int, 3> terminals, int workers)
{
    if (candidate.size() > gadget_edge_limit)
        throw PreconditionError("gadget has " + to_string(candidate.size()) + " edges; exhaustive check allows at most " +
                                to_string(gadget_edge_limit));

    GadgetReport report;
    report.reason = structural_defect(candidate, terminals);
    if (! report.reason.empty())
        return report;

    vector<bool> terminal_edge(candidate.size(), false);
    for (int t : terminals)
        terminal_edge[candidate.incident(t)[0].edge] = true;

    const std::int64_t total = std::int64_t{1} << candidate.size();
    std::uint64_t surviving = 0, mixed = none, negative = none, positive = none;

#pragma omp parallel num_threads(workers > 0 ? workers : 1)
    {
        vector<int> value(candidate.order());
#pragma omp for schedule(static) reduction(+ : surviving) reduction(min : mixed, negative, positive)
        for (std::int64_t mask = 0; mask < total; ++mask) {
            auto m = static_cast<std::uint64_t>(mask);
            int kind = classify(candidate, terminal_edge, terminals, m, value);
            if (kind == 0)
                continue;
            ++surviving;
            if (kind == 1)
                negative = std::min(negative, m);
            else if (kind == 2)
                positive = std::min(positive, m);
            else
                mixed = std::min(mixed, m);
        }
    }

    report.surviving = surviving;
    if (negative != none)
        report.type1 = from_mask(candidate, negative);
    if (positive != none)
        report.type2 = from_mask(candidate, positive);
    if (mixed != none) {
        report.counterexample = from_mask(candidate, mixed);
        report.reason = "terminals disagree in a surviving orientation";
    }
    else if (! report.type1 || ! report.type2)
        report.reason = "only one terminal polarity is realisable";
    else
        report.pass = true;
    return report;
}

const Gadget & shipped_gadget()
{
    // Terminals 0-2 hang off w = 3, 4, 5. The w's and z = 6, 7, 8 form a
    // hexagon; each z carries u = 9, 10, 11, and each u two leaves.
    static const Gadget gadget = [] {
        Gadget g;
        g.graph = Graph(18, {{0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 6}, {4, 7}, {5, 7}, {5, 8}, {3, 8},
                             {6, 9}, {7, 10}, {8, 11}, {9, 12}, {9, 13}, {10, 14}, {10, 15}, {11, 16}, {11, 17}});
        g.terminals = {0, 1, 2};
        auto report = verify_gadget(g.graph, g.terminals);
        if (! report.pass)
            throw std::logic_error("shipped gadget failed verification: " + report.reason);
        g.type1 = *report.type1;
        g.type2 = *report.type2;
        return g;
    }();
    return gadget;
}

}  // namespace iop
