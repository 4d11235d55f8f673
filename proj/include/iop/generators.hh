#pragma once

#include <iop/graph.hh>

#include <cstdint>
#include <optional>
#include <string_view>

namespace iop {

enum class Family { Cycle, Complete, Star, Tree, Subcubic };

std::optional<Family> parse_family(std::string_view name);

/**
 * Deterministic instance for (family, n, seed).
 *   cycle     C_n, n >= 3
 *   complete  K_n, n >= 1
 *   star      K_{1,n-1} centred at 0, n >= 1
 *   tree      uniform labelled tree from a random Pruefer sequence, n >= 1
 *   subcubic  connected, maximum degree 3: a random tree of degree <= 3
 *             plus random extra edges between vertices of degree < 3
 * The seed only matters for tree and subcubic. Throws PreconditionError
 * for n outside the family's range.
 */
Graph generate(Family family, int n, std::uint64_t seed);

}  // namespace iop
