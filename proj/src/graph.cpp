#include "chargraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace chargraph {

namespace {

std::string join_labels(const std::vector<u128>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(labels[i]);
    }
    return out;
}

} // namespace

PrimeGraph::PrimeGraph(std::vector<u128> vertex_labels,
                       const std::vector<std::pair<u128, u128>>& edge_list)
    : verts_(std::move(vertex_labels)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());

    std::vector<u128> bad;
    for (u128 v : verts_)
        if (!is_prime(v)) bad.push_back(v);
    if (!bad.empty())
        throw std::domain_error("PrimeGraph: vertex labels are not prime: " + join_labels(bad));

    adj_.assign(verts_.size(), std::vector<bool>(verts_.size(), false));
    for (const auto& [a, b] : edge_list) {
        if (a == b)
            throw std::domain_error("PrimeGraph: self-loop at vertex " + to_string(a));
        auto ia = std::lower_bound(verts_.begin(), verts_.end(), a);
        auto ib = std::lower_bound(verts_.begin(), verts_.end(), b);
        if (ia == verts_.end() || *ia != a)
            throw std::domain_error("PrimeGraph: edge endpoint not a vertex: " + to_string(a));
        if (ib == verts_.end() || *ib != b)
            throw std::domain_error("PrimeGraph: edge endpoint not a vertex: " + to_string(b));
        std::size_t i = static_cast<std::size_t>(ia - verts_.begin());
        std::size_t j = static_cast<std::size_t>(ib - verts_.begin());
        adj_[i][j] = true;
        adj_[j][i] = true;
    }
}

std::size_t PrimeGraph::edge_count() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (std::size_t j = i + 1; j < verts_.size(); ++j)
            if (adj_[i][j]) ++count;
    return count;
}

std::vector<std::pair<u128, u128>> PrimeGraph::edges() const {
    std::vector<std::pair<u128, u128>> out;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (std::size_t j = i + 1; j < verts_.size(); ++j)
            if (adj_[i][j]) out.emplace_back(verts_[i], verts_[j]);
    return out;
}

bool PrimeGraph::has_vertex(u128 p) const {
    return std::binary_search(verts_.begin(), verts_.end(), p);
}

bool PrimeGraph::adjacent(u128 p, u128 q) const {
    auto ip = std::lower_bound(verts_.begin(), verts_.end(), p);
    auto iq = std::lower_bound(verts_.begin(), verts_.end(), q);
    if (ip == verts_.end() || *ip != p || iq == verts_.end() || *iq != q) return false;
    return adj_[static_cast<std::size_t>(ip - verts_.begin())]
               [static_cast<std::size_t>(iq - verts_.begin())];
}

std::size_t PrimeGraph::index_of(u128 p) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), p);
    if (it == verts_.end() || *it != p)
        throw std::domain_error("PrimeGraph: no vertex labeled " + to_string(p));
    return static_cast<std::size_t>(it - verts_.begin());
}

std::size_t PrimeGraph::degree_at(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < verts_.size(); ++j)
        if (adj_[i][j]) ++d;
    return d;
}

bool PrimeGraph::operator==(const PrimeGraph& other) const {
    return verts_ == other.verts_ && adj_ == other.adj_;
}

PrimeGraph complement(const PrimeGraph& g) {
    std::vector<std::pair<u128, u128>> flipped;
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.adjacent_at(i, j)) flipped.emplace_back(g.label_at(i), g.label_at(j));
    return PrimeGraph(g.vertices(), flipped);
}

PrimeGraph induced(const PrimeGraph& g, const std::vector<u128>& subset) {
    std::vector<u128> missing;
    for (u128 p : subset)
        if (!g.has_vertex(p)) missing.push_back(p);
    if (!missing.empty()) {
        std::sort(missing.begin(), missing.end());
        missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
        throw std::domain_error("induced: primes not in the graph: " + join_labels(missing));
    }
    std::vector<u128> verts(subset);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<std::pair<u128, u128>> kept;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) kept.emplace_back(verts[i], verts[j]);
    return PrimeGraph(std::move(verts), kept);
}

PrimeGraph join(const PrimeGraph& g, const PrimeGraph& h) {
    std::vector<u128> overlap;
    for (u128 p : g.vertices())
        if (h.has_vertex(p)) overlap.push_back(p);
    if (!overlap.empty())
        throw std::domain_error("join: vertex sets overlap at: " + join_labels(overlap));

    std::vector<u128> verts(g.vertices());
    verts.insert(verts.end(), h.vertices().begin(), h.vertices().end());
    std::vector<std::pair<u128, u128>> edges = g.edges();
    for (const auto& e : h.edges()) edges.push_back(e);
    for (u128 a : g.vertices())
        for (u128 b : h.vertices()) edges.emplace_back(a, b);
    return PrimeGraph(std::move(verts), edges);
}

std::vector<std::vector<u128>> connected_components(const PrimeGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<u128>> components;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> stack = {s};
        std::vector<u128> members;
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            members.push_back(g.label_at(v));
            for (std::size_t w = 0; w < n; ++w) {
                if (g.adjacent_at(v, w) && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }
    // Vertices scan in ascending label order, so components already come out
    // ordered by their smallest member.
    return components;
}

bool is_complete(const PrimeGraph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.adjacent_at(i, j)) return false;
    return true;
}

} // namespace chargraph
