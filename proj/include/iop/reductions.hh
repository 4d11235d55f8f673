#pragma once

#include <iop/exact.hh>
#include <iop/graph.hh>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace iop {

/**
 * Variable gadget: a bipartite graph with degrees in {1, 3} and three
 * degree-1 terminals on one side. In every width-1 orientation that is
 * proper away from the terminal edges the terminals share one value.
 * type1 gives them -1, type2 gives them +1.
 */
struct Gadget {
    Graph graph;
    std::array<int, 3> terminals{};
    Orientation type1;
    Orientation type2;
};

struct GadgetReport {
    bool pass = false;
    std::string reason;
    /// Number of orientations passing the local width-1 test.
    std::uint64_t surviving = 0;
    /// A surviving orientation with mixed terminal values, if any.
    std::optional<Orientation> counterexample;
    std::optional<Orientation> type1;
    std::optional<Orientation> type2;
};

/// Largest edge count verify_gadget accepts.
inline constexpr int gadget_edge_limit = 24;

/// Exhaustive check over all 2^m orientations. Throws PreconditionError
/// above gadget_edge_limit edges. workers > 1 shards the enumeration; the
/// report does not depend on the worker count.
GadgetReport verify_gadget(const Graph & candidate, std::array<int, 3> terminals, int workers = 1);

/// The gadget used by build_g_phi, with both types filled in.
const Gadget & shipped_gadget();

/// Cubic monotone NAE (2,3)-SAT: variables 1..var_count, each in exactly
/// three clauses of two or three distinct variables.
struct NaeInstance {
    int var_count = 0;
    std::vector<std::vector<int>> clauses;

    /// Throws PreconditionError describing the first violation.
    void validate() const;
    bool satisfied_by(const std::vector<bool> & assignment) const;
};

NaeInstance read_nae(std::istream & in);
void write_nae(std::ostream & out, const NaeInstance & phi);

struct ReductionMaps {
    Gadget gadget;
    /// gadget_vertex[a][i]: vertex of G_phi for gadget vertex i of variable a + 1.
    std::vector<std::vector<int>> gadget_vertex;
    /// clause_vertex[i]: the clause vertex, or the merged vertex for 2-clauses.
    std::vector<int> clause_vertex;
    /// clause_terminal[i][j]: terminal index (0..2) claimed from the j-th variable of clause i.
    std::vector<std::vector<int>> clause_terminal;
};

struct GPhi {
    Graph graph;
    ReductionMaps maps;
};

/// Throws PreconditionError if phi is invalid.
GPhi build_g_phi(const NaeInstance & phi, const Gadget & gadget = shipped_gadget());

/// Comment lines "# var a -> vertices ..." and "# clause i -> vertex v".
void write_maps(std::ostream & out, const NaeInstance & phi, const ReductionMaps & maps);

/// assignment[a] is the value of variable a + 1. Throws PreconditionError
/// naming a clause whose variables all agree.
Orientation assignment_to_orientation(const NaeInstance & phi, const GPhi & reduction, const std::vector<bool> & assignment);

/// Throws PreconditionError unless d is proper with width <= 1, and
/// std::runtime_error if some gadget matches neither type.
std::vector<bool> orientation_to_assignment(const NaeInstance & phi, const GPhi & reduction, const Orientation & d);

/// line_graph(g) for a 3-regular g; throws PreconditionError otherwise.
Graph build_line_instance(const Graph & g);

/// Proper edge colouring with colours 1..3, or nullopt. Throws
/// PreconditionError unless g is 3-regular, BudgetExceeded past budget nodes.
std::optional<std::vector<int>> edge_3_coloring(const Graph & g, std::uint64_t budget = default_budget);

/// Orientation of line_graph(g) whose vertices of colour 1, 2, 3 get
/// in-out-degree -2, 0, +2.
Orientation coloring_to_orientation(const Graph & g, const std::vector<int> & colors);

/// Colour of edge e = 1, 2, 3 for in-out-degree -2, 0, +2 of its line-graph vertex.
std::vector<int> orientation_to_coloring(const Graph & g, const Graph & h, const Orientation & d);

}  // namespace iop
