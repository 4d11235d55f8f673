#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace iop {

/// An undirected edge in canonical form, u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/// One entry of a vertex's adjacency list.
struct Incidence {
    int neighbor = 0;
    int edge = 0;
};

/**
 * Immutable simple undirected graph.
 *
 * Edges keep the order they were given in; the i-th edge is the identity an
 * Orientation refers to. Each pair is normalised so that u < v. Self-loops,
 * duplicate pairs and out-of-range endpoints are rejected with a
 * PreconditionError.
 */
class Graph {
public:
    Graph() = default;
    Graph(int order, std::span<const std::pair<int, int>> edges);
    Graph(int order, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return static_cast<int>(adjacency_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge> & edges() const { return edges_; }
    const Edge & edge(int e) const { return edges_[e]; }

    /// Incident edges of v sorted by neighbor index.
    std::span<const Incidence> incident(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;

    std::optional<int> find_edge(int a, int b) const;
    bool adjacent(int a, int b) const { return find_edge(a, b).has_value(); }

    friend bool operator==(const Graph & a, const Graph & b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

private:
    void build(int order, std::span<const std::pair<int, int>> edges);

    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/**
 * Direction of every edge of a companion graph. forward(e) means the
 * canonical edge (u, v) is the arc u -> v.
 */
class Orientation {
public:
    Orientation() = default;
    Orientation(const Graph & g, std::vector<bool> forward);

    /// All edges directed from the lower to the higher endpoint.
    static Orientation all_forward(const Graph & g) { return Orientation(g, std::vector<bool>(g.size(), true)); }

    int size() const { return static_cast<int>(forward_.size()); }
    bool forward(int e) const { return forward_[e]; }
    const std::vector<bool> & directions() const { return forward_; }

    int tail(const Graph & g, int e) const { return forward_[e] ? g.edge(e).u : g.edge(e).v; }
    int head(const Graph & g, int e) const { return forward_[e] ? g.edge(e).v : g.edge(e).u; }

    friend bool operator==(const Orientation &, const Orientation &) = default;
    friend Orientation reverse(const Orientation & d);

private:
    explicit Orientation(std::vector<bool> forward) : forward_(std::move(forward)) {}

    std::vector<bool> forward_;
};

/// Per-vertex in-degree minus out-degree. Entries sum to zero.
std::vector<int> in_out_degrees(const Graph & g, const Orientation & d);

struct ProperCheck {
    bool proper = false;
    int width = 0;
    std::optional<int> violating_edge;
};

ProperCheck check_proper(const Graph & g, const Orientation & d);

Orientation reverse(const Orientation & d);

enum class Side : std::uint8_t { X, Y };

/**
 * Two-colouring of a graph, or a witness that none exists. The lowest-index
 * vertex of every component is placed on side X.
 */
struct Bipartition {
    std::vector<Side> side;
    /// Odd cycle v0 v1 ... v(k-1); consecutive entries and (v(k-1), v0) are edges.
    std::vector<int> odd_cycle;

    bool bipartite() const { return odd_cycle.empty(); }
};

Bipartition bipartition(const Graph & g);

/// A connected component and its induced subgraph. Local vertex i is
/// vertices[i] in the parent, local edge j is edges[j].
struct Component {
    std::vector<int> vertices;
    std::vector<int> edges;
    Graph graph;
};

/// Connected components ordered by their lowest vertex.
std::vector<Component> components(const Graph & g);

struct LineGraph {
    Graph graph;
    /// Vertex of graph -> edge of the source graph. Always the identity.
    std::vector<int> edge_of;
};

/// Vertices are the edges of g, adjacent when they share an endpoint.
LineGraph line_graph(const Graph & g);

/// Orientation with in-degree equal to out-degree at every vertex.
/// Throws PreconditionError naming an odd-degree vertex if one exists.
Orientation eulerian_orientation(const Graph & g);

}  // namespace iop
