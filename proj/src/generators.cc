#include <iop/errors.hh>
#include <iop/generators.hh>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace iop {

using std::pair;
using std::to_string;
using std::vector;

std::optional<Family> parse_family(std::string_view name)
{
    if (name == "cycle")
        return Family::Cycle;
    if (name == "complete")
        return Family::Complete;
    if (name == "star")
        return Family::Star;
    if (name == "tree")
        return Family::Tree;
    if (name == "subcubic")
        return Family::Subcubic;
    return std::nullopt;
}

namespace {
    int draw(std::mt19937_64 & rng, int lo, int hi)
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    vector<pair<int, int>> pruefer_tree(int n, std::mt19937_64 & rng)
    {
        vector<pair<int, int>> edges;
        if (n < 2)
            return edges;
        vector<int> code(n - 2);
        for (int & x : code)
            x = draw(rng, 0, n - 1);

        vector<int> degree(n, 1);
        for (int x : code)
            ++degree[x];
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1)
                leaves.insert(v);
        for (int x : code) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(leaf, x);
            if (--degree[x] == 1)
                leaves.insert(x);
        }
        edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
        return edges;
    }

    vector<pair<int, int>> subcubic_graph(int n, std::mt19937_64 & rng)
    {
        vector<pair<int, int>> edges;
        vector<int> degree(n, 0);
        vector<std::set<int>> adjacent(n);
        auto link = [&](int a, int b) {
            edges.emplace_back(a, b);
            ++degree[a];
            ++degree[b];
            adjacent[a].insert(b);
            adjacent[b].insert(a);
        };

        // Every vertex joins an earlier one that still has room; one always
        // exists because a tree on k >= 2 vertices has a leaf.
        for (int v = 1; v < n; ++v) {
            int u;
            do
                u = draw(rng, 0, v - 1);
            while (degree[u] >= 3);
            link(u, v);
        }

        int extra = n < 2 ? 0 : draw(rng, 0, n);
        for (int attempt = 0; attempt < 4 * extra && extra > 0; ++attempt) {
            int a = draw(rng, 0, n - 1), b = draw(rng, 0, n - 1);
            if (a == b || degree[a] >= 3 || degree[b] >= 3 || adjacent[a].count(b))
                continue;
            link(a, b);
            --extra;
        }
        return edges;
    }
}

Graph generate(Family family, int n, std::uint64_t seed)
{
    const int minimum = family == Family::Cycle ? 3 : 1;
    if (n < minimum || n > 1'000'000)
        throw PreconditionError("n = " + to_string(n) + " is out of range for this family (minimum " + to_string(minimum) + ")");

    std::mt19937_64 rng(seed);
    vector<pair<int, int>> edges;
    switch (family) {
    case Family::Cycle:
        for (int v = 0; v < n; ++v)
            edges.emplace_back(v, (v + 1) % n);
        break;
    case Family::Complete:
        if (n > 2000)
            throw PreconditionError("complete graphs are limited to 2000 vertices");
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                edges.emplace_back(a, b);
        break;
    case Family::Star:
        for (int v = 1; v < n; ++v)
            edges.emplace_back(0, v);
        break;
    case Family::Tree: edges = pruefer_tree(n, rng); break;
    case Family::Subcubic: edges = subcubic_graph(n, rng); break;
    }
    return Graph(n, edges);
}

}  // namespace iop
