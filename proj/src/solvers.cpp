#include "chargraph/solvers.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "chargraph/errors.hpp"

namespace chargraph {
namespace detail {

std::vector<std::uint32_t> adjacency_masks(const PrimeGraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && g.adjacent_at(i, j))
                adj[i] |= std::uint32_t{1} << j;
    return adj;
}

namespace {

constexpr std::uint32_t bit(int v) { return std::uint32_t{1} << v; }

// Max clique: iterate candidates lowest-index-first, prune when even taking
// every remaining candidate cannot beat the incumbent.
struct CliqueSearch {
    const std::vector<std::uint32_t>& adj;
    int best = 0;
    std::uint32_t best_mask = 0;

    void expand(std::uint32_t clique, std::uint32_t cand)
    {
        const int size = std::popcount(clique);
        if (size > best) {
            best = size;
            best_mask = clique;
        }
        while (cand != 0) {
            if (size + std::popcount(cand) <= best)
                return;
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            expand(clique | bit(v), cand & adj[v]);
        }
    }
};

// Max independent set: binary include/exclude branching on the lowest open
// vertex. Deliberately not implemented as max-clique-of-the-complement so
// the alpha(G) == omega(complement(G)) identity remains a usable cross-check.
struct MisSearch {
    const std::vector<std::uint32_t>& adj;
    int best = 0;
    std::uint32_t best_mask = 0;

    void expand(std::uint32_t chosen, std::uint32_t open)
    {
        const int size = std::popcount(chosen);
        if (size > best) {
            best = size;
            best_mask = chosen;
        }
        if (open == 0 || size + std::popcount(open) <= best)
            return;
        const int v = std::countr_zero(open);
        expand(chosen | bit(v), open & ~bit(v) & ~adj[v]);
        // Excluding a vertex with no open neighbor is never better.
        if ((adj[v] & open) != 0)
            expand(chosen, open & ~bit(v));
    }
};

// Proper k-coloring by backtracking. Colors are introduced canonically
// (a vertex may open at most one new color) to kill color-permutation
// symmetry; `order` fixes the vertex sequence.
struct ColorSearch {
    const std::vector<std::uint32_t>& adj;
    const std::vector<int>& order;
    std::vector<int>& color;
    int k;

    bool assign(std::size_t pos, int max_used)
    {
        if (pos == order.size())
            return true;
        const int v = order[pos];
        std::uint32_t forbidden = 0;
        for (std::uint32_t nb = adj[v]; nb != 0; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            if (color[u] >= 0)
                forbidden |= bit(color[u]);
        }
        const int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if ((forbidden & bit(c)) != 0)
                continue;
            color[v] = c;
            if (assign(pos + 1, std::max(max_used, c)))
                return true;
            color[v] = -1;
        }
        return false;
    }
};

std::vector<std::uint32_t> restrict_to(const std::vector<std::uint32_t>& adj,
                                       std::uint32_t active)
{
    std::vector<std::uint32_t> out(adj.size(), 0);
    for (std::size_t i = 0; i < adj.size(); ++i)
        if ((active & bit(static_cast<int>(i))) != 0)
            out[i] = adj[i] & active;
    return out;
}

} // namespace

int max_clique_masks(const std::vector<std::uint32_t>& adj, std::uint32_t active,
                     std::uint32_t* witness)
{
    const std::vector<std::uint32_t> restricted = restrict_to(adj, active);
    CliqueSearch search{restricted};
    search.expand(0, active);
    if (witness != nullptr)
        *witness = search.best_mask;
    return search.best;
}

int max_independent_masks(const std::vector<std::uint32_t>& adj, std::uint32_t active,
                          std::uint32_t* witness)
{
    const std::vector<std::uint32_t> restricted = restrict_to(adj, active);
    MisSearch search{restricted};
    search.expand(0, active);
    if (witness != nullptr)
        *witness = search.best_mask;
    return search.best;
}

int chromatic_masks(const std::vector<std::uint32_t>& adj, std::uint32_t active,
                    std::vector<int>* coloring)
{
    std::vector<int> color(adj.size(), -1);
    if (active == 0) {
        if (coloring != nullptr)
            *coloring = color;
        return 0;
    }

    std::uint32_t clique_mask = 0;
    const int lower = max_clique_masks(adj, active, &clique_mask);
    const std::vector<std::uint32_t> restricted = restrict_to(adj, active);

    // Vertex order: a maximum clique first (forces an early contradiction
    // when k is too small), then the rest by descending active degree.
    std::vector<int> order;
    for (std::uint32_t m = clique_mask; m != 0; m &= m - 1)
        order.push_back(std::countr_zero(m));
    std::vector<int> rest;
    for (std::uint32_t m = active & ~clique_mask; m != 0; m &= m - 1)
        rest.push_back(std::countr_zero(m));
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
        return std::popcount(restricted[a]) > std::popcount(restricted[b]);
    });
    order.insert(order.end(), rest.begin(), rest.end());

    // k = lower always terminates at k = |active| since every graph on m
    // vertices is m-colorable.
    for (int k = lower;; ++k) {
        std::fill(color.begin(), color.end(), -1);
        ColorSearch search{restricted, order, color, k};
        if (search.assign(0, -1)) {
            if (coloring != nullptr)
                *coloring = color;
            return k;
        }
    }
}

} // namespace detail

namespace {

void require_cap(const PrimeGraph& g)
{
    if (g.vertex_count() > kSolverVertexCap)
        throw capacity_error("exact solvers accept at most " +
                             std::to_string(kSolverVertexCap) + " vertices, got " +
                             std::to_string(g.vertex_count()));
}

std::uint32_t full_mask(const PrimeGraph& g)
{
    const std::size_t n = g.vertex_count();
    return n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
}

std::vector<u128> mask_to_labels(const PrimeGraph& g, std::uint32_t mask)
{
    std::vector<u128> labels;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if ((mask & (std::uint32_t{1} << i)) != 0)
            labels.push_back(g.label_at(i));
    return labels; // indices follow ascending labels, so already sorted
}

} // namespace

int clique_number(const PrimeGraph& g)
{
    require_cap(g);
    return detail::max_clique_masks(detail::adjacency_masks(g), full_mask(g), nullptr);
}

std::vector<u128> max_clique(const PrimeGraph& g)
{
    require_cap(g);
    std::uint32_t witness = 0;
    detail::max_clique_masks(detail::adjacency_masks(g), full_mask(g), &witness);
    return mask_to_labels(g, witness);
}

int independence_number(const PrimeGraph& g)
{
    require_cap(g);
    return detail::max_independent_masks(detail::adjacency_masks(g), full_mask(g), nullptr);
}

std::vector<u128> max_independent_set(const PrimeGraph& g)
{
    require_cap(g);
    std::uint32_t witness = 0;
    detail::max_independent_masks(detail::adjacency_masks(g), full_mask(g), &witness);
    return mask_to_labels(g, witness);
}

ColoringResult chromatic_number(const PrimeGraph& g)
{
    require_cap(g);
    std::vector<int> color;
    ColoringResult result;
    result.chi = detail::chromatic_masks(detail::adjacency_masks(g), full_mask(g), &color);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        result.assignment[g.label_at(i)] = color[i];
    return result;
}

} // namespace chargraph
