#pragma once

#include <iop/graph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace iop {

inline constexpr std::uint64_t default_budget = 50'000'000;

struct SearchOptions {
    /// Maximum number of search nodes (single edge assignments).
    std::uint64_t budget = default_budget;
    /// 1 runs the serial reference search; more splits the top of the tree.
    int workers = 1;
};

enum class VerdictKind { Feasible, Infeasible, BudgetExceeded };

struct Verdict {
    VerdictKind kind = VerdictKind::Infeasible;
    int width = 0;
    /// Present iff kind == Feasible; proper with width <= this->width.
    std::optional<Orientation> certificate;
    std::uint64_t nodes = 0;

    bool feasible() const { return kind == VerdictKind::Feasible; }
};

/**
 * Does g admit an in-out-proper orientation of width at most k?
 *
 * Backtracks over edge directions in a fixed order, keeping partial
 * in-out-degrees. A branch is cut when some vertex can no longer reach a
 * value in [-k, k] that differs from all of its finished neighbours, or when
 * two finished neighbours collide. The first edge is only tried in its
 * forward direction, since reversing a solution gives another solution.
 *
 * With workers == 1 the certificate is deterministic.
 */
Verdict decide_width(const Graph & g, int k, const SearchOptions & options = {});

/// Serial reference implementation of decide_width.
Verdict decide_width_serial(const Graph & g, int k, std::uint64_t budget = default_budget);

/// OpenMP implementation: the first few edges are expanded serially and the
/// resulting subtrees are searched by a pool of workers. Same decision as the
/// serial search; the certificate may differ.
Verdict decide_width_parallel(const Graph & g, int k, std::uint64_t budget, int workers);

struct InOutNumber {
    int value = 0;
    Orientation certificate;
    std::uint64_t nodes = 0;
};

/// Exact in-out-proper orientation number. The budget is shared by all
/// width decisions; running out throws BudgetExceeded. Requires order() >= 1.
InOutNumber in_out_number(const Graph & g, const SearchOptions & options = {});

/// First width worth trying: max(ceil((chi - 1) / 2), 1 if some vertex has odd degree).
int in_out_lower_bound(const Graph & g);

/// Exact chromatic number by backtracking; meant for small graphs (n <= ~16).
int chromatic_number(const Graph & g);

/// Order in which decide_width assigns edges.
std::vector<int> search_order(const Graph & g);

/// Called for each orientation found; return false to stop the enumeration.
using ProperVisitor = std::function<bool(const Orientation &)>;

/**
 * Visits every in-out-proper orientation of width at most k, in
 * lexicographic order of the direction vector (forward before backward,
 * edge 0 most significant). Returns the number of search nodes used and
 * throws BudgetExceeded when the budget runs out.
 */
std::uint64_t enumerate_proper(const Graph & g, int k, const ProperVisitor & visit, std::uint64_t budget = default_budget);

/// Everything enumerate_proper would visit, as a vector.
std::vector<Orientation> collect_proper(const Graph & g, int k, std::uint64_t budget = default_budget);

/// Parallel collect_proper; returns the same sequence in the same order.
std::vector<Orientation> collect_proper_parallel(const Graph & g, int k, std::uint64_t budget, int workers);

}  // namespace iop
