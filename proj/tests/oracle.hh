#pragma once

// Brute-force references. Nothing here uses the search engine, the solvers
// or check_proper: every quantity is recomputed from the edge list.

#include <iop/graph.hh>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using iop::Graph;

/// Direction vector for index x in lexicographic order: edge 0 is the most
/// significant position and forward comes first.
inline std::vector<bool> directions(int m, std::uint64_t x)
{
    std::vector<bool> forward(m);
    for (int e = 0; e < m; ++e)
        forward[e] = ((x >> (m - 1 - e)) & 1) == 0;
    return forward;
}

inline std::vector<int> values(const Graph & g, const std::vector<bool> & forward)
{
    std::vector<int> value(g.order(), 0);
    for (int e = 0; e < g.size(); ++e) {
        int tail = forward[e] ? g.edge(e).u : g.edge(e).v;
        int head = forward[e] ? g.edge(e).v : g.edge(e).u;
        --value[tail];
        ++value[head];
    }
    return value;
}

/// Width of forward if it is in-out-proper, otherwise nullopt.
inline std::optional<int> proper_width(const Graph & g, const std::vector<bool> & forward)
{
    auto value = values(g, forward);
    for (const auto & e : g.edges())
        if (value[e.u] == value[e.v])
            return std::nullopt;
    int width = 0;
    for (int x : value)
        width = std::max(width, x < 0 ? -x : x);
    return width;
}

/// All proper orientations of width <= k, in lexicographic order.
inline std::vector<std::vector<bool>> proper_orientations(const Graph & g, int k)
{
    std::vector<std::vector<bool>> found;
    const int m = g.size();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        auto forward = directions(m, x);
        auto w = proper_width(g, forward);
        if (w && *w <= k)
            found.push_back(std::move(forward));
    }
    return found;
}

inline int in_out_number(const Graph & g)
{
    int best = -1;
    const int m = g.size();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x)
        if (auto w = proper_width(g, directions(m, x)); w && (best == -1 || *w < best))
            best = *w;
    return best;
}

inline bool width_feasible(const Graph & g, int k)
{
    const int m = g.size();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x)
        if (auto w = proper_width(g, directions(m, x)); w && *w <= k)
            return true;
    return false;
}

/// Smallest number of colours, by trying every assignment.
inline int chromatic_number(const Graph & g)
{
    const int n = g.order();
    if (n == 0)
        return 0;
    for (int k = 1;; ++k) {
        std::vector<int> color(n, 0);
        while (true) {
            bool ok = true;
            for (const auto & e : g.edges())
                ok = ok && color[e.u] != color[e.v];
            if (ok)
                return k;
            int i = 0;
            while (i < n && ++color[i] == k)
                color[i++] = 0;
            if (i == n)
                break;
        }
    }
}

/// Does a proper edge colouring with three colours exist? (3^m assignments)
inline bool edge_3_colorable(const Graph & g)
{
    const int m = g.size();
    std::vector<int> color(m, 0);
    while (true) {
        bool ok = true;
        for (int v = 0; v < g.order() && ok; ++v) {
            auto inc = g.incident(v);
            for (std::size_t i = 0; i < inc.size() && ok; ++i)
                for (std::size_t j = 0; j < i && ok; ++j)
                    ok = color[inc[i].edge] != color[inc[j].edge];
        }
        if (ok)
            return true;
        int i = 0;
        while (i < m && ++color[i] == 3)
            color[i++] = 0;
        if (i == m)
            return false;
    }
}

}  // namespace oracle
