#include "chargraph/arith.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace chargraph {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

u128 parse_u128(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_u128: empty string");
    constexpr u128 max = ~static_cast<u128>(0);
    u128 value = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("parse_u128: non-digit character in \"" + std::string(s) + "\"");
        unsigned digit = static_cast<unsigned>(c - '0');
        if (value > (max - digit) / 10)
            throw std::invalid_argument("parse_u128: value out of 128-bit range");
        value = value * 10 + digit;
    }
    return value;
}

u128 checked_mul(u128 a, u128 b) {
    u128 result = 0;
    if (__builtin_mul_overflow(a, b, &result))
        throw capacity_error("product exceeds 128-bit range: " + to_string(a) + " * " + to_string(b));
    return result;
}

namespace {

// Overflow-safe a+b and a-b mod m, for a, b already reduced mod m.
inline u128 add_mod(u128 a, u128 b, u128 m) {
    return (a >= m - b && b != 0) ? a - (m - b) : a + b;
}

inline u128 sub_mod(u128 a, u128 b, u128 m) {
    return a >= b ? a - b : m - (b - a);
}

} // namespace

u128 mul_mod(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    // Fast path: the product fits in 128 bits when both operands fit in 64.
    if (a <= std::numeric_limits<std::uint64_t>::max() &&
        b <= std::numeric_limits<std::uint64_t>::max())
        return (a * b) % m;
    u128 result = 0;
    while (b > 0) {
        if (b & 1) result = add_mod(result, a, m);
        b >>= 1;
        a = add_mod(a, a, m);
    }
    return result;
}

u128 pow_mod(u128 base, u128 exp, u128 m) {
    if (m == 1) return 0;
    u128 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace {

bool miller_rabin_witness(u128 n, u128 a, u128 d, int r) {
    u128 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true; // a witnesses compositeness
}

int jacobi_symbol(long long dd, u128 n) {
    u128 a = dd < 0 ? static_cast<u128>(-dd) % n : static_cast<u128>(dd) % n;
    int sign = 1;
    if (dd < 0 && (n % 4) == 3) sign = -sign;
    u128 m = n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            u128 r = m % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, m);
        if ((a % 4) == 3 && (m % 4) == 3) sign = -sign;
        a %= m;
    }
    return m == 1 ? sign : 0;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
// Expects n odd, not divisible by any of the Miller-Rabin bases.
bool strong_lucas_probable_prime(u128 n) {
    long long d = 5;
    while (true) {
        int j = jacobi_symbol(d, n);
        if (j == 0) return false; // shares a factor with n
        if (j == -1) break;
        d = d > 0 ? -(d + 2) : -(d - 2);
        // A perfect square never yields Jacobi -1; squares this large are composite.
        if (d > 1000) return false;
    }
    long long q_ll = (1 - d) / 4;
    const u128 q = q_ll >= 0 ? static_cast<u128>(q_ll) % n : n - (static_cast<u128>(-q_ll) % n);
    const u128 d_mod = d >= 0 ? static_cast<u128>(d) % n : n - (static_cast<u128>(-d) % n);

    u128 m = n + 1;
    int s = 0;
    while ((m & 1) == 0) {
        m >>= 1;
        ++s;
    }

    auto half_mod = [n](u128 x) { // x / 2 mod n, n odd
        if ((x & 1) == 0) return x >> 1;
        return ((x >> 1) + ((n - 1) >> 1) + 1) % n;
    };

    // Binary ladder for (U_m, V_m) with P = 1, starting from (U_1, V_1).
    u128 u = 1, v = 1, qk = q;
    int bits = 0;
    for (u128 t = m; t > 1; t >>= 1) ++bits;
    for (int i = bits - 1; i >= 0; --i) {
        u = mul_mod(u, v, n);
        v = sub_mod(mul_mod(v, v, n), mul_mod(2, qk, n), n);
        qk = mul_mod(qk, qk, n);
        if ((m >> i) & 1) {
            u128 nu = half_mod(add_mod(u, v, n));
            u128 nv = half_mod(add_mod(mul_mod(d_mod, u, n), v, n));
            u = nu;
            v = nv;
            qk = mul_mod(qk, q, n);
        }
    }

    if (u == 0 || v == 0) return true;
    for (int i = 1; i < s; ++i) {
        v = sub_mod(mul_mod(v, v, n), mul_mod(2, qk, n), n);
        if (v == 0) return true;
        qk = mul_mod(qk, qk, n);
    }
    return false;
}

// The first 12 primes witness all composites below ~3.3e24.
constexpr std::array<unsigned, 12> kMrBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr u128 kMrDeterministicBound = (static_cast<u128>(3317044ULL) << 64); // > 3.317e24

} // namespace

bool is_prime(u128 n) {
    if (n < 2) return false;
    for (unsigned p : kMrBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u128 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (unsigned a : kMrBases)
        if (miller_rabin_witness(n, a, d, r)) return false;
    if (n < kMrDeterministicBound) return true;
    return strong_lucas_probable_prime(n);
}

std::optional<std::pair<u128, int>> prime_power(u128 q) {
    if (q < 2) return std::nullopt;
    u128 p = 0;
    if (is_prime(q)) {
        p = q;
    } else {
        if (q % 2 == 0) {
            p = 2;
        } else if (q % 3 == 0) {
            p = 3;
        } else {
            for (u128 f = 5; f * f <= q; f += 6) {
                if (q % f == 0) {
                    p = f;
                    break;
                }
                if (q % (f + 2) == 0) {
                    p = f + 2;
                    break;
                }
            }
        }
        if (p == 0) return std::nullopt; // composite q always has a factor <= sqrt(q)
    }
    int m = 0;
    u128 rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, m);
}

bool is_power_of_two(u128 n) {
    return n > 0 && (n & (n - 1)) == 0;
}

} // namespace chargraph
