#pragma once

#include <compare>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "welch/arith.hpp"
#include "welch/errors.hpp"

namespace welch {

// The ambient ring Z/p^eZ of every computation.
class prime_power_modulus {
public:
    prime_power_modulus(i64 p, int e) : p_(p), e_(e) {
        if (e < 1) throw invalid_input("prime_power_modulus: exponent must be >= 1");
        if (!is_prime(p)) throw invalid_input("prime_power_modulus: p must be prime");
        modulus_ = checked_pow(p, e);
    }

    i64 p() const { return p_; }
    int e() const { return e_; }
    i64 value() const { return modulus_; }
    bool odd() const { return p_ != 2; }

    // |(Z/p^eZ)^x| = p^(e-1)(p-1)
    i64 unit_group_order() const { return modulus_ / p_ * (p_ - 1); }

    prime_power_modulus reduced(int k) const {
        if (k < 1 || k > e_) throw invalid_input("prime_power_modulus: bad reduced precision");
        return prime_power_modulus(p_, k, checked_pow(p_, k));
    }

    friend bool operator==(const prime_power_modulus&, const prime_power_modulus&) = default;

private:
    prime_power_modulus(i64 p, int e, i64 modulus) : p_(p), e_(e), modulus_(modulus) {}

    i64 p_;
    int e_;
    i64 modulus_;
};

// Residue canonicalized into {0, ..., p^e - 1} on every operation.
struct residue {
    i64 value;
    prime_power_modulus mod;

    residue(i64 v, prime_power_modulus m) : value(mod_floor(v, m.value())), mod(m) {}

    bool is_unit() const { return value % mod.p() != 0; }
    residue reduced(int k) const { return residue(value, mod.reduced(k)); }

    friend bool operator==(const residue&, const residue&) = default;
};

namespace detail {
inline void require_same_modulus(const residue& a, const residue& b, const char* who) {
    if (!(a.mod == b.mod)) throw invalid_input(std::string(who) + ": mixed moduli");
}
}  // namespace detail

inline residue operator*(const residue& a, const residue& b) {
    detail::require_same_modulus(a, b, "operator*");
    return residue(mul_mod(a.value, b.value, a.mod.value()), a.mod);
}

inline residue operator+(const residue& a, const residue& b) {
    detail::require_same_modulus(a, b, "operator+");
    return residue(mod_floor(a.value + b.value, a.mod.value()), a.mod);
}

inline residue operator-(const residue& a, const residue& b) {
    detail::require_same_modulus(a, b, "operator-");
    return residue(mod_floor(a.value - b.value, a.mod.value()), a.mod);
}

// a^(-1) mod p^e via the extended Euclidean algorithm.
inline residue mod_inverse(const residue& a) {
    if (!a.is_unit()) throw non_unit("mod_inverse: p divides the argument");
    egcd_result eg = extended_gcd(a.value, a.mod.value());
    return residue(eg.x, a.mod);
}

// base^exponent mod p^e; negative exponents go through the inverse.
inline residue mod_pow(const residue& base, i64 exponent) {
    if (exponent < 0) {
        if (exponent == std::numeric_limits<i64>::min()) throw invalid_input("mod_pow: exponent out of range");
        if (!base.is_unit()) throw non_unit_base("mod_pow: negative exponent requires a unit base");
        return residue(pow_mod(mod_inverse(base).value, -exponent, base.mod.value()), base.mod);
    }
    return residue(pow_mod(base.value, exponent, base.mod.value()), base.mod);
}

// Prime factorization of the unit group order p^(e-1)(p-1); only the p-1
// part needs trial division.
inline std::vector<std::pair<i64, int>> unit_group_order_factorization(const prime_power_modulus& mod) {
    std::vector<std::pair<i64, int>> out = factorize(mod.p() - 1);
    if (mod.e() > 1) out.emplace_back(mod.p(), mod.e() - 1);
    return out;
}

// Least k >= 1 with g^k = 1, found by stripping primes from the group order.
inline i64 multiplicative_order(const residue& g) {
    if (!g.is_unit()) throw non_unit("multiplicative_order: p divides the argument");
    i64 ord = g.mod.unit_group_order();
    for (auto [q, k] : unit_group_order_factorization(g.mod)) {
        (void)k;
        while (ord % q == 0 && pow_mod(g.value, ord / q, g.mod.value()) == 1) ord /= q;
    }
    return ord;
}

namespace detail {

// Baby-step giant-step in the subgroup generated by gamma (order q):
// the digit d in [0, q) with gamma^d = h, if it exists.
inline std::optional<i64> bsgs_digit(i64 gamma, i64 h, i64 q, i64 n) {
    i64 step = isqrt_ceil(q);
    std::unordered_map<i64, i64> baby;
    baby.reserve(static_cast<size_t>(step));
    i64 cur = 1 % n;
    for (i64 j = 0; j < step; ++j) {
        baby.emplace(cur, j);
        cur = mul_mod(cur, gamma, n);
    }
    i64 giant = pow_mod(gamma, q - (step % q), n);  // gamma^(-step), since gamma^q = 1
    i64 y = mod_floor(h, n);
    for (i64 i = 0; i * step < q; ++i) {
        auto it = baby.find(y);
        if (it != baby.end()) {
            i64 d = i * step + it->second;
            if (d < q && pow_mod(gamma, d, n) == mod_floor(h, n)) return d;
        }
        y = mul_mod(y, giant, n);
    }
    return std::nullopt;
}

}  // namespace detail

// Least k >= 0 with g^k = a, or nothing when a lies outside <g>.
// Pohlig-Hellman over the factored order of g, one prime-power digit
// expansion at a time.
inline std::optional<i64> discrete_log(const residue& g, const residue& a) {
    detail::require_same_modulus(g, a, "discrete_log");
    if (!g.is_unit() || !a.is_unit()) throw non_unit("discrete_log: arguments must be units");
    const i64 n = g.mod.value();
    const i64 ord = multiplicative_order(g);
    if (a.value == 1 % n) return 0;

    // factor ord by dividing out the known prime base of the group order
    std::vector<std::pair<i64, int>> ord_factors;
    {
        i64 rest = ord;
        for (auto [q, k] : unit_group_order_factorization(g.mod)) {
            (void)k;
            if (rest % q != 0) continue;
            int f = 0;
            while (rest % q == 0) {
                rest /= q;
                ++f;
            }
            ord_factors.emplace_back(q, f);
        }
    }

    const residue g_inv = mod_inverse(g);
    i64 x = 0, combined = 1;
    for (auto [q, f] : ord_factors) {
        i64 gamma = pow_mod(g.value, ord / q, n);
        i64 xk = 0, qi = 1;
        for (int i = 0; i < f; ++i) {
            i64 shifted = mul_mod(a.value, pow_mod(g_inv.value, xk, n), n);
            i64 h = pow_mod(shifted, ord / (qi * q), n);
            auto digit = detail::bsgs_digit(gamma, h, q, n);
            if (!digit) return std::nullopt;
            xk += *digit * qi;
            qi *= q;
        }
        x = crt_pair(x, combined, xk, qi);
        combined *= qi;
    }
    // the digit equations are necessary, not sufficient, when the ambient
    // group is not cyclic (p = 2); a final powering settles membership
    if (pow_mod(g.value, x, n) != a.value) return std::nullopt;
    return x;
}

// Order p^(e-1)(p-1) test; the notion is reserved for odd p here.
inline bool is_primitive_root(const residue& g) {
    if (!g.mod.odd()) throw odd_prime_required("is_primitive_root: p must be odd");
    if (!g.is_unit()) throw non_unit("is_primitive_root: p divides the argument");
    return multiplicative_order(g) == g.mod.unit_group_order();
}

}  // namespace welch
