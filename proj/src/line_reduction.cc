#include <iop/errors.hh>
#include <iop/reductions.hh>

#include <string>

namespace iop {

using std::to_string;
using std::vector;

namespace {
    void require_cubic(const Graph & g)
    {
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) != 3)
                throw PreconditionError("graph is not 3-regular: vertex " + to_string(v) + " has degree " + to_string(g.degree(v)));
    }

    void require_proper_coloring(const Graph & g, const vector<int> & colors)
    {
        if (static_cast<int>(colors.size()) != g.size())
            throw PreconditionError("colouring has " + to_string(colors.size()) + " entries for " + to_string(g.size()) + " edges");
        for (int e = 0; e < g.size(); ++e)
            if (colors[e] < 1 || colors[e] > 3)
                throw PreconditionError("edge " + to_string(e) + " has colour " + to_string(colors[e]) + " outside 1..3");
        for (int v = 0; v < g.order(); ++v) {
            auto inc = g.incident(v);
            for (std::size_t i = 0; i < inc.size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    if (colors[inc[i].edge] == colors[inc[j].edge])
                        throw PreconditionError("edges " + to_string(inc[j].edge) + " and " + to_string(inc[i].edge) +
                                                " share vertex " + to_string(v) + " and colour " + to_string(colors[inc[i].edge]));
        }
    }
}

Graph build_line_instance(const Graph & g)
{
    require_cubic(g);
    return line_graph(g).graph;
}

std::optional<vector<int>> edge_3_coloring(const Graph & g, std::uint64_t budget)
{
    require_cubic(g);
    const int m = g.size();
    vector<int> colors(m, 0);
    std::uint64_t nodes = 0;

    auto allowed = [&](int e, int c) {
        for (int end : {g.edge(e).u, g.edge(e).v})
            for (auto [w, f] : g.incident(end))
                if (f != e && colors[f] == c)
                    return false;
        return true;
    };

    // Edges are coloured in input order; the first edge is fixed to colour 1.
    int e = 0;
    while (e >= 0 && e < m) {
        int c = colors[e] + 1;
        int limit = e == 0 ? 1 : 3;
        while (c <= limit && ! allowed(e, c))
            ++c;
        if (++nodes > budget)
            throw BudgetExceeded("edge colouring exceeded " + to_string(budget) + " nodes");
        if (c > limit) {
            colors[e] = 0;
            --e;
        }
        else {
            colors[e] = c;
            ++e;
        }
    }
    if (e < 0)
        return std::nullopt;
    return colors;
}

Orientation coloring_to_orientation(const Graph & g, const vector<int> & colors)
{
    require_cubic(g);
    require_proper_coloring(g, colors);
    auto lg = line_graph(g);
    const Graph & h = lg.graph;

    // Edges between colour classes 1 and 3 go 1 -> 3; the rest is even and
    // gets a balanced orientation.
    vector<bool> forward(h.size(), true);
    vector<std::pair<int, int>> rest;
    vector<int> rest_edge;
    for (int e = 0; e < h.size(); ++e) {
        auto [a, b] = h.edge(e);
        int ca = colors[lg.edge_of[a]], cb = colors[lg.edge_of[b]];
        if ((ca == 1 && cb == 3) || (ca == 3 && cb == 1))
            forward[e] = ca == 1;
        else {
            rest.emplace_back(a, b);
            rest_edge.push_back(e);
        }
    }
    Graph even(h.order(), rest);
    auto balanced = eulerian_orientation(even);
    for (int j = 0; j < even.size(); ++j)
        forward[rest_edge[j]] = balanced.forward(j);
    return Orientation(h, std::move(forward));
}

vector<int> orientation_to_coloring(const Graph & g, const Graph & h, const Orientation & d)
{
    auto lg = line_graph(g);
    if (! (lg.graph == h))
        throw PreconditionError("second graph is not the line graph of the first");
    if (d.size() != h.size())
        throw PreconditionError("orientation does not belong to the line graph");
    auto check = check_proper(h, d);
    if (! check.proper)
        throw PreconditionError("orientation is not in-out-proper");
    if (check.width > 2)
        throw PreconditionError("orientation has width " + to_string(check.width) + ", expected at most 2");

    auto values = in_out_degrees(h, d);
    vector<int> colors(g.size());
    for (int v = 0; v < h.order(); ++v) {
        int x = values[v];
        if (x != -2 && x != 0 && x != 2)
            throw PreconditionError("line-graph vertex " + to_string(v) + " has in-out-degree " + to_string(x));
        colors[lg.edge_of[v]] = x / 2 + 2;
    }
    return colors;
}

}  // namespace iop
