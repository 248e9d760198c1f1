#include "chargraph/perfection.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "chargraph/errors.hpp"
#include "chargraph/solvers.hpp"

namespace chargraph {

namespace {

using IndexCycle = std::vector<std::size_t>;
// Receives each cycle as vertex indices; return false to stop the search.
using CycleSink = std::function<bool(const IndexCycle&)>;

// Enumerates cycles by DFS over paths anchored at their smallest vertex s:
// every later vertex is > s, so each cycle is met exactly at its minimum.
// The two traversal directions are collapsed by keeping the orientation
// whose second vertex is smaller than its last. With `induced` set, paths
// are kept chordfree, so closures are precisely the induced cycles.
class CycleSearch {
public:
    CycleSearch(const PrimeGraph& g, std::size_t min_len, bool induced,
                CycleSink sink)
        : g_(g), min_len_(std::max<std::size_t>(min_len, 3)), induced_(induced),
          sink_(std::move(sink)), in_path_(g.vertex_count(), 0) {}

    void run()
    {
        for (std::size_t s = 0; s < g_.vertex_count(); ++s) {
            path_.assign(1, s);
            in_path_.assign(g_.vertex_count(), 0);
            in_path_[s] = 1;
            if (!extend(s))
                return;
        }
    }

private:
    bool extend(std::size_t s)
    {
        const std::size_t last = path_.back();
        for (std::size_t w = s + 1; w < g_.vertex_count(); ++w) {
            if (in_path_[w] || !g_.adjacent_at(last, w))
                continue;
            if (path_.size() == 1) { // w is the path's second vertex
                if (!descend(s, w))
                    return false;
                continue;
            }
            if (induced_ && chord_to_interior(w))
                continue;
            if (g_.adjacent_at(s, w)) {
                const std::size_t len = path_.size() + 1;
                if (len >= min_len_ && len % 2 == 1 && path_[1] < w) {
                    path_.push_back(w);
                    const bool keep = sink_(path_);
                    path_.pop_back();
                    if (!keep)
                        return false;
                }
                // An induced path cannot continue through w: the edge w-s
                // would be a chord of any longer cycle.
                if (induced_)
                    continue;
            }
            if (!descend(s, w))
                return false;
        }
        return true;
    }

    bool descend(std::size_t s, std::size_t w)
    {
        path_.push_back(w);
        in_path_[w] = 1;
        const bool keep = extend(s);
        path_.pop_back();
        in_path_[w] = 0;
        return keep;
    }

    bool chord_to_interior(std::size_t w) const
    {
        for (std::size_t i = 1; i + 1 < path_.size(); ++i)
            if (g_.adjacent_at(path_[i], w))
                return true;
        return false;
    }

    const PrimeGraph& g_;
    std::size_t min_len_;
    bool induced_;
    CycleSink sink_;
    IndexCycle path_;
    std::vector<char> in_path_;
};

std::vector<u128> to_labels(const PrimeGraph& g, const IndexCycle& cycle)
{
    std::vector<u128> labels;
    labels.reserve(cycle.size());
    for (std::size_t i : cycle)
        labels.push_back(g.label_at(i));
    return labels;
}

std::vector<std::vector<u128>> collect_cycles(const PrimeGraph& g,
                                              std::size_t min_len, bool induced)
{
    std::vector<std::vector<u128>> out;
    CycleSearch search(g, min_len, induced, [&](const IndexCycle& cycle) {
        out.push_back(to_labels(g, cycle));
        return true;
    });
    search.run();
    return out;
}

} // namespace

bool certificate_valid(const PrimeGraph& g, const HoleCertificate& cert)
{
    const std::size_t k = cert.cycle.size();
    if (k < 5 || k % 2 == 0)
        return false;
    std::vector<std::size_t> idx;
    idx.reserve(k);
    for (u128 v : cert.cycle) {
        if (!g.has_vertex(v))
            return false;
        idx.push_back(g.index_of(v));
    }
    std::vector<std::size_t> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    const bool want_edge_on_ring = cert.kind == HoleKind::hole;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            const bool expect = consecutive == want_edge_on_ring;
            if (g.adjacent_at(idx[i], idx[j]) != expect)
                return false;
        }
    return true;
}

std::vector<std::vector<u128>> induced_odd_cycles(const PrimeGraph& g,
                                                  std::size_t min_len)
{
    return collect_cycles(g, min_len, true);
}

std::vector<std::vector<u128>> simple_odd_cycles(const PrimeGraph& g,
                                                 std::size_t min_len)
{
    return collect_cycles(g, min_len, false);
}

std::optional<HoleCertificate> find_odd_hole(const PrimeGraph& g)
{
    std::optional<HoleCertificate> found;
    CycleSearch search(g, 5, true, [&](const IndexCycle& cycle) {
        found = HoleCertificate{HoleKind::hole, to_labels(g, cycle)};
        return false;
    });
    search.run();
    return found;
}

std::optional<HoleCertificate> find_odd_antihole(const PrimeGraph& g)
{
    std::optional<HoleCertificate> hole = find_odd_hole(complement(g));
    if (!hole)
        return std::nullopt;
    return HoleCertificate{HoleKind::antihole, std::move(hole->cycle)};
}

PerfectionResult is_perfect(const PrimeGraph& g)
{
    if (auto hole = find_odd_hole(g))
        return PerfectionResult{false, std::move(hole)};
    if (auto antihole = find_odd_antihole(g))
        return PerfectionResult{false, std::move(antihole)};
    return PerfectionResult{true, std::nullopt};
}

bool is_perfect_by_definition(const PrimeGraph& g)
{
    const std::size_t n = g.vertex_count();
    if (n > kOracleVertexCap)
        throw capacity_error("definition-based perfection check accepts at most " +
                             std::to_string(kOracleVertexCap) + " vertices, got " +
                             std::to_string(n));
    const std::vector<std::uint32_t> adj = detail::adjacency_masks(g);
    const std::uint32_t full = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
    for (std::uint32_t subset = 0; subset <= full; ++subset) {
        const int omega = detail::max_clique_masks(adj, subset, nullptr);
        const int chi = detail::chromatic_masks(adj, subset, nullptr);
        if (omega != chi)
            return false;
    }
    return true;
}

} // namespace chargraph
