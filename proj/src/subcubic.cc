#include <iop/errors.hh>
#include <iop/subcubic.hh>

#include <omp.h>

#include <atomic>
#include <stdexcept>
#include <string>

namespace iop {

using std::optional;
using std::to_string;
using std::vector;

BranchDecomposition branch_reduce(const Graph & g)
{
    if (g.max_degree() > 3)
        throw PreconditionError("graph is not subcubic: maximum degree " + to_string(g.max_degree()));

    BranchDecomposition bd;
    bd.branch_vertex.assign(g.order(), -1);

    for (const auto & c : components(g)) {
        if (c.vertices.size() == 1) {
            bd.isolated.push_back(c.vertices.front());
            continue;
        }
        bool all_two = true;
        for (int v : c.vertices)
            all_two = all_two && g.degree(v) == 2;
        if (! all_two)
            continue;
        vector<int> cycle{c.vertices.front()};
        int prev = -1, cur = c.vertices.front();
        while (true) {
            auto inc = g.incident(cur);
            int next = inc[0].neighbor != prev ? inc[0].neighbor : inc[1].neighbor;
            if (next == cycle.front())
                break;
            cycle.push_back(next);
            prev = cur;
            cur = next;
        }
        bd.cycle_components.push_back(std::move(cycle));
    }

    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1 || g.degree(v) == 3) {
            bd.branch_vertex[v] = static_cast<int>(bd.original_vertex.size());
            bd.original_vertex.push_back(v);
        }

    vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edge(e);
        if (bd.branch_vertex[u] != -1 && bd.branch_vertex[v] != -1) {
            edges.emplace_back(bd.branch_vertex[u], bd.branch_vertex[v]);
            bd.original_edge.push_back(e);
        }
    }

    vector<bool> used(g.size(), false);
    for (int b : bd.original_vertex)
        for (auto [w, e] : g.incident(b)) {
            if (g.degree(w) != 2 || used[e])
                continue;
            Chain chain;
            chain.left = b;
            int last = e, cur = w;
            used[e] = true;
            chain.edges.push_back(e);
            while (g.degree(cur) == 2) {
                chain.interior.push_back(cur);
                auto inc = g.incident(cur);
                auto step = inc[0].edge != last ? inc[0] : inc[1];
                used[step.edge] = true;
                chain.edges.push_back(step.edge);
                last = step.edge;
                cur = step.neighbor;
            }
            chain.right = cur;
            bd.chains.push_back(std::move(chain));
        }

    int next_vertex = static_cast<int>(bd.original_vertex.size());
    auto add_dummy = [&](int end) {
        int dummy = next_vertex++;
        bd.original_vertex.push_back(-1);
        edges.emplace_back(bd.branch_vertex[end], dummy);
        bd.original_edge.push_back(-1);
        return static_cast<int>(edges.size()) - 1;
    };
    for (auto & chain : bd.chains) {
        chain.left_dummy_edge = add_dummy(chain.left);
        chain.right_dummy_edge = add_dummy(chain.right);
    }

    bd.dummy.assign(next_vertex, false);
    for (int i = 0; i < next_vertex; ++i)
        bd.dummy[i] = bd.original_vertex[i] == -1;
    bd.branch_graph = Graph(next_vertex, edges);
    return bd;
}

optional<Orientation> component_feasible(const Graph & c, const vector<bool> & dummy, FeasibilityBackend backend)
{
    if (static_cast<int>(dummy.size()) != c.order())
        throw PreconditionError("dummy mask does not match the component");
    for (int v = 0; v < c.order(); ++v) {
        int d = c.degree(v);
        if ((d != 1 && d != 3) || (dummy[v] && d != 1))
            throw PreconditionError("vertex " + to_string(v) + " has degree " + to_string(d) + " in a branch component");
    }

    auto sides = bipartition(c);
    if (! sides.bipartite())
        return std::nullopt;
    auto system = build_feasibility_system(c, dummy, sides);

    vector<int> x;
    if (backend == FeasibilityBackend::Flow) {
        auto solution = solve_by_flow(system);
        if (! solution)
            return std::nullopt;
        x = std::move(*solution);
    }
    else {
        auto solution = solve_relaxation(system);
        if (! solution)
            return std::nullopt;
        for (const auto & value : *solution) {
            if (value.denominator() != 1 || value.numerator() < 0 || value.numerator() > 1)
                throw std::logic_error("relaxation returned a fractional vertex");
            x.push_back(static_cast<int>(value.numerator()));
        }
    }

    vector<bool> forward(c.size());
    for (int e = 0; e < c.size(); ++e) {
        int head = x[2 * e] == 1 ? system.x_end[e] : system.y_end[e];
        forward[e] = head == c.edge(e).v;
    }
    return Orientation(c, std::move(forward));
}

vector<bool> extend_chain(bool left_end_inward, bool right_end_inward, int interior)
{
    if (interior < 1)
        throw PreconditionError("a chain has at least one interior vertex");

    // arcs[i] joins p_i and p_(i+1), where p_0 and p_(k+1) are the branch ends.
    const int k = interior;
    vector<bool> arcs(k + 1);
    arcs[0] = left_end_inward;
    arcs[k] = ! right_end_inward;

    auto value = [&](int i) { return (arcs[i - 1] ? 1 : -1) + (arcs[i] ? -1 : 1); };

    for (int i = 1; i < k; ++i)
        arcs[i] = ! (i >= 2 && arcs[i - 1] && value(i - 1) == 0);

    if (k >= 2 && value(k - 1) == value(k))
        arcs[k - 1] = ! arcs[k - 1];

    for (int i = 2; i <= k; ++i)
        if (value(i - 1) == value(i))
            throw std::logic_error("chain extension left equal neighbours");
    return arcs;
}

vector<bool> orient_cycle(int length)
{
    if (length < 3)
        throw PreconditionError("a cycle has at least 3 vertices");
    // Alternating directions; an odd cycle gets a single 0 at position 0.
    vector<bool> dirs(length);
    for (int i = 0; i < length; ++i)
        dirs[i] = i % 2 == 0;
    return dirs;
}

namespace {
    void orient_along(const Graph & g, const vector<int> & walk, const vector<bool> & dirs, bool closed, vector<char> & forward)
    {
        const int steps = static_cast<int>(dirs.size());
        for (int i = 0; i < steps; ++i) {
            int a = walk[i], b = walk[closed ? (i + 1) % walk.size() : i + 1];
            int e = *g.find_edge(a, b);
            forward[e] = (g.edge(e).u == a) == dirs[i];
        }
    }
}

Orientation orient_cycle_component(const Graph & g)
{
    bool cycle = g.order() >= 3 && g.size() == g.order() && components(g).size() == 1;
    for (int v = 0; cycle && v < g.order(); ++v)
        cycle = g.degree(v) == 2;
    if (! cycle)
        throw PreconditionError("graph is not a single cycle");

    auto bd = branch_reduce(g);
    vector<char> forward(g.size(), 1);
    const auto & walk = bd.cycle_components.front();
    orient_along(g, walk, orient_cycle(g.order()), true, forward);
    return Orientation(g, vector<bool>(forward.begin(), forward.end()));
}

Verdict decide_subcubic_width2(const Graph & g, const SubcubicOptions & options)
{
    auto bd = branch_reduce(g);
    Verdict verdict;
    verdict.width = 2;

    auto parts = components(bd.branch_graph);
    const int count = static_cast<int>(parts.size());
    vector<char> branch_forward(bd.branch_graph.size(), 1);
    std::atomic<bool> infeasible{false};

#pragma omp parallel for schedule(dynamic, 4) num_threads(options.workers > 0 ? options.workers : 1)
    for (int i = 0; i < count; ++i) {
        if (infeasible.load(std::memory_order_relaxed))
            continue;
        const auto & part = parts[i];
        vector<bool> dummy(part.vertices.size());
        for (std::size_t j = 0; j < part.vertices.size(); ++j)
            dummy[j] = bd.dummy[part.vertices[j]];
        auto local = component_feasible(part.graph, dummy, options.backend);
        if (! local) {
            infeasible.store(true, std::memory_order_relaxed);
            continue;
        }
        for (int j = 0; j < part.graph.size(); ++j)
            branch_forward[part.edges[j]] = local->forward(j);
    }
    if (infeasible.load()) {
        verdict.kind = VerdictKind::Infeasible;
        return verdict;
    }

    vector<char> forward(g.size(), 1);
    for (int be = 0; be < bd.branch_graph.size(); ++be) {
        int e = bd.original_edge[be];
        if (e == -1)
            continue;
        int tail = bd.original_vertex[branch_forward[be] ? bd.branch_graph.edge(be).u : bd.branch_graph.edge(be).v];
        forward[e] = g.edge(e).u == tail;
    }

    for (const auto & chain : bd.chains) {
        // Dummies are numbered after every branch vertex, so a dummy edge
        // read forward points away from the branch vertex into the chain.
        auto dirs = extend_chain(branch_forward[chain.left_dummy_edge], branch_forward[chain.right_dummy_edge],
                                 static_cast<int>(chain.interior.size()));
        vector<int> walk{chain.left};
        walk.insert(walk.end(), chain.interior.begin(), chain.interior.end());
        walk.push_back(chain.right);
        orient_along(g, walk, dirs, false, forward);
    }

    for (const auto & cycle : bd.cycle_components)
        orient_along(g, cycle, orient_cycle(static_cast<int>(cycle.size())), true, forward);

    Orientation d(g, vector<bool>(forward.begin(), forward.end()));
    auto check = check_proper(g, d);
    if (! check.proper || check.width > 2)
        throw std::logic_error("subcubic assembly produced an invalid orientation");
    verdict.kind = VerdictKind::Feasible;
    verdict.certificate = std::move(d);
    return verdict;
}

}  // namespace iop
