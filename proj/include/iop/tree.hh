#pragma once

#include <iop/graph.hh>

#include <vector>

namespace iop {

/// A tree with vertices listed by distance from the root (BFS order).
struct RootedTree {
    Graph tree;
    int root = 0;
    /// Vertices in BFS order from root; distance is non-decreasing.
    std::vector<int> order;
    /// Parent of each vertex, -1 for the root.
    std::vector<int> father;
    /// Edge to the parent, -1 for the root.
    std::vector<int> father_edge;
    std::vector<int> distance;

    /// Throws PreconditionError unless g is a tree and root a vertex of it.
    static RootedTree build(Graph g, int root);
};

/**
 * In-out-proper orientation of width at most 3.
 *
 * Vertices are handled in BFS order. Even levels aim for positive values,
 * odd levels for negative ones; a vertex first orients the edges to its
 * children, and two local repairs reverse the edge to the father: a
 * degree-2 vertex whose father ended at 0 goes to +-2, and a leaf that
 * matches its father's +-1 pushes the father to +-3.
 */
Orientation orient_tree(const RootedTree & t);

/// orient_tree on every component of a forest, each rooted at its lowest
/// vertex. Components may be processed by several workers.
Orientation orient_any_tree(const Graph & g, int workers = 1);

}  // namespace iop
