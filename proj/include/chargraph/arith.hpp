#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chargraph/errors.hpp"

namespace chargraph {

// All degree and vertex values are carried as unsigned 128-bit integers so
// that products of two 64-bit degrees stay exact.
using u128 = unsigned __int128;

std::string to_string(u128 v);

/// Parses a decimal string into a u128. Throws std::invalid_argument on
/// malformed input or overflow.
u128 parse_u128(std::string_view s);

/// a * b, throwing capacity_error if the product does not fit in 128 bits.
u128 checked_mul(u128 a, u128 b);

u128 mul_mod(u128 a, u128 b, u128 m);
u128 pow_mod(u128 base, u128 exp, u128 m);

/// Primality test: deterministic Miller-Rabin for inputs below 3.3e24,
/// Baillie-PSW (Miller-Rabin base 2 plus a strong Lucas test) above that.
bool is_prime(u128 n);

/// If q = p^m for a prime p and m >= 1, returns (p, m).
std::optional<std::pair<u128, int>> prime_power(u128 q);

bool is_power_of_two(u128 n);

} // namespace chargraph
