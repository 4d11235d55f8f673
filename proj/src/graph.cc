#include <iop/errors.hh>
#include <iop/graph.hh>

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <string>

namespace iop {

using std::pair;
using std::string;
using std::to_string;
using std::vector;

Graph::Graph(int order, std::span<const pair<int, int>> edges)
{
    build(order, edges);
}

Graph::Graph(int order, std::initializer_list<pair<int, int>> edges)
{
    build(order, std::span<const pair<int, int>>(edges.begin(), edges.size()));
}

void Graph::build(int order, std::span<const pair<int, int>> edges)
{
    if (order < 0)
        throw PreconditionError("negative vertex count " + to_string(order));

    adjacency_.assign(order, {});
    edges_.reserve(edges.size());
    std::set<pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= order || b >= order)
            throw PreconditionError("edge (" + to_string(a) + ", " + to_string(b) + ") has an endpoint outside [0, " + to_string(order) + ")");
        if (a == b)
            throw PreconditionError("self-loop at vertex " + to_string(a));
        Edge e{std::min(a, b), std::max(a, b)};
        if (! seen.emplace(e.u, e.v).second)
            throw PreconditionError("duplicate edge (" + to_string(e.u) + ", " + to_string(e.v) + ")");
        int id = static_cast<int>(edges_.size());
        edges_.push_back(e);
        adjacency_[e.u].push_back({e.v, id});
        adjacency_[e.v].push_back({e.u, id});
    }

    for (auto & list : adjacency_)
        std::sort(list.begin(), list.end(), [](const Incidence & x, const Incidence & y) { return x.neighbor < y.neighbor; });
}

int Graph::max_degree() const
{
    int result = 0;
    for (int v = 0; v < order(); ++v)
        result = std::max(result, degree(v));
    return result;
}

std::optional<int> Graph::find_edge(int a, int b) const
{
    if (a < 0 || b < 0 || a >= order() || b >= order())
        return std::nullopt;
    auto list = incident(a);
    auto it = std::lower_bound(list.begin(), list.end(), b, [](const Incidence & x, int n) { return x.neighbor < n; });
    if (it != list.end() && it->neighbor == b)
        return it->edge;
    return std::nullopt;
}

Orientation::Orientation(const Graph & g, vector<bool> forward) :
    forward_(std::move(forward))
{
    if (static_cast<int>(forward_.size()) != g.size())
        throw PreconditionError("orientation has " + to_string(forward_.size()) + " directions but the graph has " + to_string(g.size()) + " edges");
}

namespace {
    void require_paired(const Graph & g, const Orientation & d)
    {
        if (d.size() != g.size())
            throw PreconditionError("orientation has " + to_string(d.size()) + " directions but the graph has " + to_string(g.size()) + " edges");
    }
}

vector<int> in_out_degrees(const Graph & g, const Orientation & d)
{
    require_paired(g, d);
    vector<int> result(g.order(), 0);
    for (int e = 0; e < g.size(); ++e) {
        ++result[d.head(g, e)];
        --result[d.tail(g, e)];
    }
    return result;
}

ProperCheck check_proper(const Graph & g, const Orientation & d)
{
    auto degrees = in_out_degrees(g, d);
    ProperCheck result;
    for (int x : degrees)
        result.width = std::max(result.width, std::abs(x));
    for (int e = 0; e < g.size(); ++e)
        if (degrees[g.edge(e).u] == degrees[g.edge(e).v]) {
            result.violating_edge = e;
            return result;
        }
    result.proper = true;
    return result;
}

Orientation reverse(const Orientation & d)
{
    vector<bool> flipped = d.forward_;
    flipped.flip();
    return Orientation(std::move(flipped));
}

Bipartition bipartition(const Graph & g)
{
    Bipartition result;
    vector<int> depth(g.order(), -1), parent(g.order(), -1);
    std::queue<int> queue;

    for (int root = 0; root < g.order(); ++root) {
        if (depth[root] != -1)
            continue;
        depth[root] = 0;
        queue.push(root);
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (auto [w, e] : g.incident(v)) {
                if (depth[w] == -1) {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    queue.push(w);
                }
                else if (depth[w] % 2 == depth[v] % 2) {
                    // Both tree paths up to the common ancestor plus vw close an odd cycle.
                    vector<int> left{v}, right{w};
                    int a = v, b = w;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            a = parent[a];
                            left.push_back(a);
                        }
                        else {
                            b = parent[b];
                            right.push_back(b);
                        }
                    }
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    left.insert(left.begin(), right.begin(), right.end());
                    result.odd_cycle = std::move(left);
                    return result;
                }
            }
        }
    }

    result.side.resize(g.order());
    for (int v = 0; v < g.order(); ++v)
        result.side[v] = depth[v] % 2 == 0 ? Side::X : Side::Y;
    return result;
}

vector<Component> components(const Graph & g)
{
    vector<int> label(g.order(), -1);
    vector<Component> result;
    vector<int> stack;
    for (int root = 0; root < g.order(); ++root) {
        if (label[root] != -1)
            continue;
        int id = static_cast<int>(result.size());
        Component c;
        label[root] = id;
        stack.push_back(root);
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            c.vertices.push_back(v);
            for (auto [w, e] : g.incident(v))
                if (label[w] == -1) {
                    label[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        result.push_back(std::move(c));
    }

    vector<int> local(g.order());
    for (auto & c : result)
        for (int i = 0; i < static_cast<int>(c.vertices.size()); ++i)
            local[c.vertices[i]] = i;

    vector<vector<pair<int, int>>> pairs(result.size());
    for (int e = 0; e < g.size(); ++e) {
        int id = label[g.edge(e).u];
        result[id].edges.push_back(e);
        pairs[id].emplace_back(local[g.edge(e).u], local[g.edge(e).v]);
    }
    for (std::size_t i = 0; i < result.size(); ++i)
        result[i].graph = Graph(static_cast<int>(result[i].vertices.size()), pairs[i]);
    return result;
}

LineGraph line_graph(const Graph & g)
{
    vector<pair<int, int>> pairs;
    for (int v = 0; v < g.order(); ++v) {
        auto list = g.incident(v);
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                pairs.emplace_back(std::min(list[i].edge, list[j].edge), std::max(list[i].edge, list[j].edge));
    }
    // Two edges of a simple graph share at most one endpoint, so no pair repeats.
    std::sort(pairs.begin(), pairs.end());

    LineGraph result;
    result.graph = Graph(g.size(), pairs);
    result.edge_of.resize(g.size());
    for (int e = 0; e < g.size(); ++e)
        result.edge_of[e] = e;
    return result;
}

Orientation eulerian_orientation(const Graph & g)
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) % 2 != 0)
            throw PreconditionError("vertex " + to_string(v) + " has odd degree " + to_string(g.degree(v)));

    // Hierholzer: walking each closed trail fixes every edge in the direction of travel.
    vector<bool> forward(g.size(), true);
    vector<bool> used(g.size(), false);
    vector<std::size_t> cursor(g.order(), 0);
    vector<int> stack;

    for (int start = 0; start < g.order(); ++start) {
        if (cursor[start] == g.incident(start).size())
            continue;
        stack.push_back(start);
        while (! stack.empty()) {
            int v = stack.back();
            auto list = g.incident(v);
            while (cursor[v] < list.size() && used[list[cursor[v]].edge])
                ++cursor[v];
            if (cursor[v] == list.size()) {
                stack.pop_back();
                continue;
            }
            auto [w, e] = list[cursor[v]];
            used[e] = true;
            forward[e] = (g.edge(e).u == v);
            stack.push_back(w);
        }
    }
    return Orientation(g, std::move(forward));
}

}  // namespace iop
