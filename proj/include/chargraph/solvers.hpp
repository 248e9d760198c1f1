#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chargraph/graph.hpp"

namespace chargraph {

/// Hard bound for the exact solvers; instances in scope stay far below it.
inline constexpr std::size_t kSolverVertexCap = 24;

struct ColoringResult {
    int chi = 0;                     // 0 only for the vertexless graph
    std::map<u128, int> assignment;  // vertex -> color in [0, chi)
};

/// Exact maximum clique size. 0 for the vertexless graph, 1 for any
/// edgeless graph with vertices. Throws capacity_error above the cap.
int clique_number(const PrimeGraph& g);

/// A maximum clique, sorted ascending; deterministic for a fixed graph.
std::vector<u128> max_clique(const PrimeGraph& g);

/// Exact maximum independent set size, computed by its own branch-and-bound
/// (not by delegating to the clique solver on the complement, so the
/// alpha(g) == omega(complement(g)) identity stays a real cross-check).
int independence_number(const PrimeGraph& g);

std::vector<u128> max_independent_set(const PrimeGraph& g);

/// Exact chromatic number with a witnessing proper coloring. The search
/// proves optimality: either chi equals the clique lower bound, or the
/// (chi-1)-coloring search was exhausted.
ColoringResult chromatic_number(const PrimeGraph& g);

namespace detail {

// Mask-level cores shared with the perfection oracle. `adj[i]` holds the
// neighbor mask of vertex i; `active` selects the induced subproblem.
int max_clique_masks(const std::vector<std::uint32_t>& adj, std::uint32_t active,
                     std::uint32_t* witness);
int max_independent_masks(const std::vector<std::uint32_t>& adj, std::uint32_t active,
                          std::uint32_t* witness);
int chromatic_masks(const std::vector<std::uint32_t>& adj, std::uint32_t active,
                    std::vector<int>* coloring);

std::vector<std::uint32_t> adjacency_masks(const PrimeGraph& g);

} // namespace detail

} // namespace chargraph
