#pragma once

#include <iop/graph.hh>

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace fixtures {

using iop::Graph;
using Edges = std::vector<std::pair<int, int>>;

inline Graph cycle(int n)
{
    Edges e;
    for (int v = 0; v < n; ++v)
        e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}

inline Graph path(int n)
{
    Edges e;
    for (int v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    return Graph(n, e);
}

inline Graph complete(int n)
{
    Edges e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            e.emplace_back(a, b);
    return Graph(n, e);
}

inline Graph star(int leaves)
{
    Edges e;
    for (int v = 1; v <= leaves; ++v)
        e.emplace_back(0, v);
    return Graph(leaves + 1, e);
}

inline Graph complete_bipartite(int a, int b)
{
    Edges e;
    for (int x = 0; x < a; ++x)
        for (int y = 0; y < b; ++y)
            e.emplace_back(x, a + y);
    return Graph(a + b, e);
}

inline Graph petersen()
{
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

/// K_3 x K_2.
inline Graph prism()
{
    return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph disjoint(const Graph & a, const Graph & b)
{
    Edges e;
    for (const auto & x : a.edges())
        e.emplace_back(x.u, x.v);
    for (const auto & x : b.edges())
        e.emplace_back(x.u + a.order(), x.v + a.order());
    return Graph(a.order() + b.order(), e);
}

inline Graph random_graph(int n, double p, std::mt19937_64 & rng)
{
    std::bernoulli_distribution coin(p);
    Edges e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng))
                e.emplace_back(a, b);
    return Graph(n, e);
}

/// Random graph with at most max_edges edges.
inline Graph random_sparse_graph(int n, int max_edges, std::mt19937_64 & rng)
{
    std::set<std::pair<int, int>> chosen;
    int target = std::uniform_int_distribution<int>(0, std::min(max_edges, n * (n - 1) / 2))(rng);
    while (static_cast<int>(chosen.size()) < target) {
        int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (a != b)
            chosen.emplace(std::min(a, b), std::max(a, b));
    }
    return Graph(n, Edges(chosen.begin(), chosen.end()));
}

/// Random graph with every degree even: odd vertices are paired up and the
/// pair's edge is toggled.
inline Graph random_even_graph(int n, double p, std::mt19937_64 & rng)
{
    auto g = random_graph(n, p, rng);
    std::set<std::pair<int, int>> edges;
    for (const auto & e : g.edges())
        edges.emplace(e.u, e.v);
    std::vector<int> odd;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) % 2 == 1)
            odd.push_back(v);
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
        std::pair<int, int> e{odd[i], odd[i + 1]};
        if (! edges.erase(e))
            edges.insert(e);
    }
    return Graph(n, Edges(edges.begin(), edges.end()));
}

inline bool connected(const Graph & g)
{
    return g.order() <= 1 || iop::components(g).size() == 1;
}

/// Every connected labelled graph on n vertices with maximum degree <= 3.
inline std::vector<Graph> connected_subcubic_graphs(int n)
{
    Edges pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            pairs.emplace_back(a, b);
    std::vector<Graph> result;
    const int p = static_cast<int>(pairs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
        if (std::popcount(mask) < static_cast<unsigned>(n - 1) || std::popcount(mask) > static_cast<unsigned>(3 * n / 2))
            continue;
        std::vector<int> degree(n, 0);
        Edges e;
        bool ok = true;
        for (int i = 0; i < p && ok; ++i)
            if ((mask >> i) & 1) {
                e.push_back(pairs[i]);
                ok = ++degree[pairs[i].first] <= 3 && ++degree[pairs[i].second] <= 3;
            }
        if (! ok)
            continue;
        Graph g(n, e);
        if (connected(g))
            result.push_back(std::move(g));
    }
    return result;
}

}  // namespace fixtures
