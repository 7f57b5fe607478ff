#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "welch/errors.hpp"

namespace welch {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Largest modulus accepted anywhere; keeps residue products inside the
// 128-bit intermediate.
inline constexpr i64 max_supported_modulus = i64{1} << 62;

// Canonical representative of a mod n in {0, ..., n-1}; n > 0.
constexpr i64 mod_floor(i64 a, i64 n) {
    i64 r = a % n;
    return r < 0 ? r + n : r;
}

// Representative of a mod n in {1, ..., n}.  The public ranges are 1-based
// while internal arithmetic is 0-based.
constexpr i64 to_one_based(i64 a, i64 n) { return mod_floor(a - 1, n) + 1; }

// a*b mod n for canonical a, b.
inline i64 mul_mod(i64 a, i64 b, i64 n) {
    if (n <= (i64{1} << 31)) return (a * b) % n;
    return static_cast<i64>((u128(a) * u128(b)) % u128(n));
}

// b^exp mod n, exp >= 0.
inline i64 pow_mod(i64 base, i64 exp, i64 n) {
    i64 result = 1 % n;
    i64 b = mod_floor(base, n);
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, b, n);
        b = mul_mod(b, b, n);
        exp >>= 1;
    }
    return result;
}

struct egcd_result {
    i64 g, x, y;  // g = gcd(a, b) = a*x + b*y
};

constexpr egcd_result extended_gcd(i64 a, i64 b) {
    i64 old_r = a, r = b;
    i64 old_x = 1, x = 0;
    i64 old_y = 0, y = 1;
    while (r != 0) {
        i64 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_x -= q * x;
        std::swap(old_x, x);
        old_y -= q * y;
        std::swap(old_y, y);
    }
    return {old_r, old_x, old_y};
}

// Inverse of a mod n; a must be coprime to n.
inline i64 inv_mod(i64 a, i64 n) {
    egcd_result r = extended_gcd(mod_floor(a, n), n);
    if (r.g != 1) throw invalid_input("inv_mod: argument is not invertible");
    return mod_floor(r.x, n);
}

// r mod m1*m2 with r = r1 (mod m1) and r = r2 (mod m2); gcd(m1, m2) = 1.
inline i64 crt_pair(i64 r1, i64 m1, i64 r2, i64 m2) {
    if (m2 == 1) return mod_floor(r1, m1);
    egcd_result eg = extended_gcd(mod_floor(m1, m2), m2);
    if (eg.g != 1) throw invalid_input("crt_pair: moduli are not coprime");
    i64 t = mul_mod(mod_floor(r2 - r1, m2), mod_floor(eg.x, m2), m2);
    u128 combined = u128(mod_floor(r1, m1)) + u128(m1) * u128(t);
    if (combined > u128(max_supported_modulus)) throw invalid_input("crt_pair: combined modulus too large");
    return static_cast<i64>(combined);
}

// Deterministic trial division; inputs are desk scale by policy.
inline bool is_prime(i64 n) {
    if (n > i64{100'000'000}) throw invalid_input("is_prime: argument above supported bound 10^8");
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Prime factorization by trial division, as (prime, exponent) pairs.
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        int k = 0;
        while (n % d == 0) {
            n /= d;
            ++k;
        }
        out.emplace_back(d, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// v_p(n) for n != 0.
inline int padic_valuation(i64 n, i64 p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// p^k as a plain integer; must stay within the supported modulus range.
inline i64 checked_pow(i64 p, int k) {
    i64 r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > max_supported_modulus / p) throw invalid_input("checked_pow: power exceeds supported range");
        r *= p;
    }
    return r;
}

inline i64 isqrt_ceil(i64 n) {
    i64 r = 1;
    while (r * r < n) ++r;
    return r;
}

}  // namespace welch
