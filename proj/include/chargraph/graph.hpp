#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chargraph/arith.hpp"

namespace chargraph {

/// A finite simple graph whose vertices are labeled by primes. Values are
/// immutable after construction and safe to share across threads.
class PrimeGraph {
public:
    PrimeGraph() = default; // the vertexless graph

    /// Builds a graph from a vertex list (deduplicated, order irrelevant) and
    /// an edge list. Throws std::domain_error if a label fails the primality
    /// test, an edge touches a missing vertex, or an edge is a self-loop.
    PrimeGraph(std::vector<u128> vertex_labels,
               const std::vector<std::pair<u128, u128>>& edge_list);

    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const;

    /// Vertex labels, sorted ascending.
    const std::vector<u128>& vertices() const { return verts_; }

    /// Edges with the smaller endpoint first, lexicographically sorted.
    std::vector<std::pair<u128, u128>> edges() const;

    bool has_vertex(u128 p) const;
    bool adjacent(u128 p, u128 q) const;

    // Index-level access; index i corresponds to vertices()[i].
    u128 label_at(std::size_t i) const { return verts_[i]; }
    std::size_t index_of(u128 p) const; // throws std::domain_error if absent
    bool adjacent_at(std::size_t i, std::size_t j) const { return adj_[i][j]; }
    std::size_t degree_at(std::size_t i) const;

    /// Label equality: same vertex label set and same edge set.
    bool operator==(const PrimeGraph& other) const;

private:
    std::vector<u128> verts_;            // sorted ascending, unique
    std::vector<std::vector<bool>> adj_; // symmetric, false diagonal
};

/// Same vertices; distinct pair adjacent iff non-adjacent in g.
PrimeGraph complement(const PrimeGraph& g);

/// Subgraph induced on the given subset of vertices. Throws
/// std::domain_error naming any requested prime not present in g.
PrimeGraph induced(const PrimeGraph& g, const std::vector<u128>& subset);

/// Disjoint union of g and h plus all edges between them. Throws
/// std::domain_error if the vertex sets overlap.
PrimeGraph join(const PrimeGraph& g, const PrimeGraph& h);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<u128>> connected_components(const PrimeGraph& g);

bool is_complete(const PrimeGraph& g);

} // namespace chargraph
