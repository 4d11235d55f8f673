#pragma once

#include <iop/exact.hh>
#include <iop/graph.hh>

#include <boost/rational.hpp>

#include <optional>
#include <vector>

namespace iop {

/// A maximal path of degree-2 vertices between two branch vertices
/// (degree 1 or 3). left and right coincide for a cycle hanging off a
/// single branch vertex.
struct Chain {
    int left = 0;
    int right = 0;
    /// Degree-2 vertices from left to right.
    std::vector<int> interior;
    /// Original edges along the chain; edges[0] touches left, edges.back() touches right.
    std::vector<int> edges;
    /// Edges of the branch graph standing in for edges.front() and edges.back().
    int left_dummy_edge = -1;
    int right_dummy_edge = -1;
};

/**
 * Subcubic graph split into its branch graph and the pieces removed from it.
 *
 * The branch graph keeps the vertices of degree 1 and 3 and the edges
 * between them. Every chain end is replaced by a dummy leaf, so each branch
 * vertex keeps its original degree. Components that are plain cycles and
 * isolated vertices are set aside.
 */
struct BranchDecomposition {
    Graph branch_graph;
    /// Branch graph vertex -> original vertex, -1 for dummies.
    std::vector<int> original_vertex;
    /// Original vertex -> branch graph vertex, -1 if not a branch vertex.
    std::vector<int> branch_vertex;
    std::vector<bool> dummy;
    /// Branch graph edge -> original edge, -1 for dummy edges.
    std::vector<int> original_edge;
    std::vector<Chain> chains;
    /// Each entry lists one cycle component in cyclic order.
    std::vector<std::vector<int>> cycle_components;
    std::vector<int> isolated;
};

/// Throws PreconditionError if some vertex has degree above 3.
BranchDecomposition branch_reduce(const Graph & g);

/**
 * 0/1 system A x = b for a bipartite {1,3}-degree component.
 *
 * Every edge e = (x, y) with x on side X has two variables: column 2e
 * (w, set when the arc is y -> x) and column 2e + 1 (w', set when the arc is
 * x -> y). Rows: one per non-dummy X vertex summing its w columns to its
 * required in-degree ((deg + 1) / 2), one per non-dummy Y vertex summing its
 * w' columns to (deg - 1) / 2, and one w + w' = 1 row per edge. The matrix
 * is the incidence matrix of a bipartite graph, hence totally unimodular.
 */
struct FeasibilitySystem {
    int columns = 0;
    /// rows[0, vertex_rows) are vertex rows; row vertex_rows + e couples edge e.
    int vertex_rows = 0;
    std::vector<std::vector<int>> rows;
    std::vector<int> rhs;
    /// For each edge of the component: its X and Y endpoints.
    std::vector<int> x_end;
    std::vector<int> y_end;
};

FeasibilitySystem build_feasibility_system(const Graph & c, const std::vector<bool> & dummy, const Bipartition & sides);

/// Integral solution via maximum flow on the in-degree demand network.
std::optional<std::vector<int>> solve_by_flow(const FeasibilitySystem & system);

/// Basic feasible solution of the continuous relaxation (x >= 0), found by
/// a phase-one simplex in exact rational arithmetic.
std::optional<std::vector<boost::rational<long long>>> solve_relaxation(const FeasibilitySystem & system);

enum class FeasibilityBackend { Flow, Relaxation };

/**
 * Orientation of a connected {1,3}-degree component in which every
 * non-dummy vertex on side X has in-out-degree +1 and every non-dummy
 * vertex on side Y has -1, or nullopt if the component is not bipartite
 * or no such orientation exists.
 */
std::optional<Orientation> component_feasible(const Graph & c, const std::vector<bool> & dummy, FeasibilityBackend backend = FeasibilityBackend::Flow);

/**
 * Directions for the edges of a chain with `interior` degree-2 vertices,
 * given the fixed directions of its two end edges. Entry i is true when
 * edge i points away from the left end. Every interior vertex ends in
 * {0, +-2} and no two adjacent interior vertices are equal.
 */
std::vector<bool> extend_chain(bool left_end_inward, bool right_end_inward, int interior);

/// Width-2 orientation of a cycle given in cyclic order; entry i directs
/// the edge between cycle[i] and cycle[i + 1]: true means cycle[i] -> cycle[i + 1].
std::vector<bool> orient_cycle(int length);

/// orient_cycle applied to a cycle graph; throws unless g is a single cycle.
Orientation orient_cycle_component(const Graph & g);

struct SubcubicOptions {
    FeasibilityBackend backend = FeasibilityBackend::Flow;
    int workers = 1;
};

/// Exact decision of width <= 2 for graphs of maximum degree at most 3.
/// An Infeasible verdict means the in-out-proper orientation number is 3.
Verdict decide_subcubic_width2(const Graph & g, const SubcubicOptions & options = {});

}  // namespace iop
