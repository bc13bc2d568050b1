#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "scx/error.hpp"

namespace scx {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer addition overflows 64 bits");
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer multiplication overflows 64 bits");
    return r;
}

inline u64 checked_pow(u64 base, u64 exp) {
    u64 r = 1;
    while (exp > 0) {
        if (exp & 1) r = checked_mul(r, base);
        exp >>= 1;
        if (exp > 0) base = checked_mul(base, base);
    }
    return r;
}

inline u64 checked_lcm(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

/// A positive integer together with its prime factorization,
/// factors sorted by prime.
struct FactoredInteger {
    u64 value = 1;
    std::vector<std::pair<u64, unsigned>> factors;  // (prime, multiplicity)

    std::vector<u64> primes() const {
        std::vector<u64> ps;
        ps.reserve(factors.size());
        for (const auto& [p, e] : factors) ps.push_back(p);
        return ps;
    }
};

/// Trial-division factorization. Exact for any m in [1, 2^64).
inline FactoredInteger factorize(u64 m) {
    if (m == 0) fail(errc::bad_argument, "factorize requires m >= 1");
    FactoredInteger out;
    out.value = m;
    auto strip = [&](u64 p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) out.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    // remaining candidates are coprime to 6
    for (u64 p = 5; p <= m / p;) {
        strip(p);
        p += 2;
        if (p <= m / p) strip(p);
        p += 4;
    }
    if (m > 1) out.factors.emplace_back(m, 1);
    return out;
}

inline bool is_prime(u64 m) {
    if (m < 2) return false;
    FactoredInteger f = factorize(m);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

inline u64 euler_phi(const FactoredInteger& f) {
    u64 phi = f.value;
    for (const auto& [p, e] : f.factors) phi = phi / p * (p - 1);
    return phi;
}

inline std::pair<FactoredInteger, u64> factorize_and_phi(u64 m) {
    FactoredInteger f = factorize(m);
    u64 phi = euler_phi(f);
    return {std::move(f), phi};
}

/// Exact binomial coefficient; throws on 64-bit overflow.
inline u64 binomial(u64 n, u64 k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u64 c = 1;
    for (u64 i = 1; i <= k; ++i) {
        // c * (n-k+i) is divisible by i: c already holds C(n-k+i-1, i-1)
        u64 num = n - k + i;
        u64 g = std::gcd(c, i);
        u64 ci = c / g;
        u64 id = i / g;
        // id divides num now
        c = checked_mul(ci, num / id);
    }
    return c;
}

}  // namespace scx
