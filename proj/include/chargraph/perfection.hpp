#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chargraph/graph.hpp"

namespace chargraph {

/// Cap for the definition-based perfection oracle (2^n induced subgraphs).
inline constexpr std::size_t kOracleVertexCap = 12;

enum class HoleKind { hole, antihole };

/// Witness for imperfection: `cycle` in cyclic order is an induced odd cycle
/// of length >= 5 in the graph (hole) or in its complement (antihole).
struct HoleCertificate {
    HoleKind kind = HoleKind::hole;
    std::vector<u128> cycle;
};

/// Re-checks a certificate against g, pair by pair. Total: malformed input
/// (even or short cycle, duplicate or unknown vertices) returns false.
bool certificate_valid(const PrimeGraph& g, const HoleCertificate& cert);

/// Every induced cycle of odd length >= min_len, once each, in cyclic order
/// starting at the cycle's smallest vertex with the smaller second vertex
/// first. Deterministic output order.
std::vector<std::vector<u128>> induced_odd_cycles(const PrimeGraph& g,
                                                  std::size_t min_len);

/// Every simple cycle (chords allowed) of odd length >= min_len, same
/// canonical form and ordering guarantees as induced_odd_cycles.
std::vector<std::vector<u128>> simple_odd_cycles(const PrimeGraph& g,
                                                 std::size_t min_len);

/// First induced odd cycle of length >= 5 in search order, if any.
std::optional<HoleCertificate> find_odd_hole(const PrimeGraph& g);

/// Odd hole of complement(g), reported with kind=antihole.
std::optional<HoleCertificate> find_odd_antihole(const PrimeGraph& g);

struct PerfectionResult {
    bool perfect = true;
    std::optional<HoleCertificate> certificate; // present iff not perfect
};

/// Strong perfect graph characterization: perfect iff no odd hole and no odd
/// antihole. Any returned certificate satisfies certificate_valid.
PerfectionResult is_perfect(const PrimeGraph& g);

/// Perfection straight from the definition: omega = chi on every one of the
/// 2^n induced subgraphs. Independent oracle for is_perfect; throws
/// capacity_error above kOracleVertexCap vertices.
bool is_perfect_by_definition(const PrimeGraph& g);

} // namespace chargraph
