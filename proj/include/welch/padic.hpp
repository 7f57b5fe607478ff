#pragma once

#include <algorithm>

#include "welch/modring.hpp"

namespace welch {

/**
 * Truncated p-adic arithmetic at working precision N (the exponent of the
 * ambient modulus p^N).
 *
 * Every unit splits as g = omega(g) * <g> with omega(g) a root of unity and
 * <g> a one-unit:
 *   - odd p: omega(g)^(p-1) = 1, omega(g) = g (mod p), <g> = 1 (mod p)
 *   - p = 2: omega(g) = +1 or -1 decided by g mod 4, <g> = 1 (mod 4)
 * log and exp are finite series truncations, exact mod p^N on their
 * convergence disks, and invert each other there.
 */

struct unit_decomposition {
    residue omega;
    residue one_unit;
    int precision;  // exponent N of the working modulus

    unit_decomposition reduced(int k) const { return {omega.reduced(k), one_unit.reduced(k), k}; }
};

// A series result together with a proven lower bound on its valuation.
struct padic_series_value {
    residue value;
    int precision;
    int valuation_floor;
};

// omega(g): the unique (p-1)-st root of unity congruent to g mod p,
// computed as the Frobenius fixed point g^(p^(N-1)) mod p^N.
inline residue teichmuller(i64 g, const prime_power_modulus& mod) {
    if (!mod.odd()) throw odd_prime_required("teichmuller: p must be odd");
    residue gr(g, mod);
    if (!gr.is_unit()) throw non_unit("teichmuller: g must be a unit");
    return mod_pow(gr, mod.value() / mod.p());
}

inline unit_decomposition decompose_unit(i64 g, const prime_power_modulus& mod) {
    if (mod.odd()) {
        residue omega = teichmuller(g, mod);
        residue one_unit = residue(g, mod) * mod_inverse(omega);
        return {omega, one_unit, mod.e()};
    }
    if (mod_floor(g, 2) == 0) throw non_unit("decompose_unit: g must be odd when p = 2");
    bool plus = mod_floor(g, 4) == 1;  // sign read off the integer argument
    return {residue(plus ? 1 : -1, mod), residue(plus ? g : -g, mod), mod.e()};
}

namespace detail {

inline void check_log_domain(const residue& u) {
    if (u.mod.odd()) {
        if (mod_floor(u.value, u.mod.p()) != 1) throw domain_error("padic_log: argument must be 1 (mod p)");
    } else {
        i64 m4 = std::min<i64>(4, u.mod.value());
        if (mod_floor(u.value, m4) != 1) throw domain_error("padic_log: argument must be 1 (mod 4)");
    }
}

}  // namespace detail

// log(u) = sum_{n>=1} (-1)^(n+1) (u-1)^n / n, exact mod p^N.
//
// Terms are never divided naively: the p-power content of (u-1)^n and of n
// is tracked as an exponent, and only the p-free part of n is inverted mod
// p^N.  Summation stops once n*v_p(u-1) - floor(log_p n) >= N, after which
// every remaining term vanishes mod p^N (the bound is monotone in n); a
// hard cap of 4N + p terms guards termination.
inline padic_series_value padic_log(const residue& u) {
    detail::check_log_domain(u);
    const i64 p = u.mod.p();
    const i64 n_mod = u.mod.value();
    const int N = u.mod.e();

    i64 x = mod_floor(u.value - 1, n_mod);
    if (x == 0) return {residue(0, u.mod), N, N};

    const int v = padic_valuation(x, p);
    const i64 xhat = x / checked_pow(p, v);

    i64 acc = 0;
    i64 xhat_pow = 1;
    int log_floor = 0;      // floor(log_p n)
    i64 p_pow_next = p;     // p^(log_floor + 1)
    const i64 hard_cap = 4 * i64{N} + p;
    for (i64 n = 1; n <= hard_cap; ++n) {
        if (n >= p_pow_next) {
            ++log_floor;
            p_pow_next = p_pow_next > max_supported_modulus / p ? max_supported_modulus : p_pow_next * p;
        }
        if (i64{v} * n - log_floor >= N) break;
        xhat_pow = mul_mod(xhat_pow, xhat, n_mod);
        int vn = (n % p == 0) ? padic_valuation(n, p) : 0;
        i64 term_val = i64{v} * n - vn;
        if (term_val < N) {
            i64 nhat = n / checked_pow(p, vn);
            i64 term = mul_mod(checked_pow(p, static_cast<int>(term_val)) % n_mod,
                               mul_mod(xhat_pow, inv_mod(nhat, n_mod), n_mod), n_mod);
            acc = mod_floor(n % 2 == 1 ? acc + term : acc - term, n_mod);
        }
    }
    return {residue(acc, u.mod), N, v};
}

// exp(x) = sum_{n>=0} x^n / n!, exact mod p^N on the convergence disk
// v_p(x) >= 1 (odd p) or v_p(x) >= 2 (p = 2).
//
// The p-power content of n! is accumulated exactly (v_p(n!) term by term,
// p-free part kept reduced mod p^N); summation stops once
// n*v - (n-1)/(p-1) >= N, a monotone lower bound on the term valuation.
inline residue padic_exp_value(const residue& x_in) {
    const i64 p = x_in.mod.p();
    const i64 n_mod = x_in.mod.value();
    const int N = x_in.mod.e();
    const int required = x_in.mod.odd() ? 1 : 2;

    i64 x = x_in.value;
    if (x == 0) return residue(1, x_in.mod);
    const int v = padic_valuation(x, p);
    if (v < required) throw domain_error("padic_exp: argument outside the convergence disk");
    const i64 xhat = x / checked_pow(p, v);

    i64 acc = 1;
    i64 xhat_pow = 1;
    i64 vfact = 0;  // v_p(n!)
    i64 fhat = 1;   // p-free part of n! mod p^N
    const i64 hard_cap = 4 * i64{N} + p;
    for (i64 n = 1; n <= hard_cap; ++n) {
        if (i64{v} * n * (p - 1) - (n - 1) >= i64{N} * (p - 1)) break;
        xhat_pow = mul_mod(xhat_pow, xhat, n_mod);
        int vn = (n % p == 0) ? padic_valuation(n, p) : 0;
        vfact += vn;
        fhat = mul_mod(fhat, mod_floor(n / checked_pow(p, vn), n_mod), n_mod);
        i64 term_val = i64{v} * n - vfact;
        if (term_val < N) {
            i64 term = mul_mod(checked_pow(p, static_cast<int>(term_val)) % n_mod,
                               mul_mod(xhat_pow, inv_mod(fhat, n_mod), n_mod), n_mod);
            acc = mod_floor(acc + term, n_mod);
        }
    }
    return residue(acc, x_in.mod);
}

inline residue padic_exp(const padic_series_value& x) { return padic_exp_value(x.value); }

// F(x) = omega^(x0) * <g>^(x-1+c): the continuous interpolation of
// n -> g^n along the class x0 of the exponent mod the order of omega.
// Equals g^(x-1+c) exactly when x-1+c = x0 (mod ord(omega)).
inline residue interpolated_f(i64 x0, i64 x, i64 c, const unit_decomposition& dec) {
    if (!dec.omega.mod.odd()) throw odd_prime_required("interpolated_f: p must be odd (use interpolated_f2)");
    return mod_pow(dec.omega, x0) * mod_pow(dec.one_unit, x - 1 + c);
}

enum class p2_branch { f0, f1 };

// p = 2 interpolation on odd x: F0 = <g>^(x-1+c), F1 = -<g>^(x-1+c).
// F0 matches g^(x-1+c) when g = 1 (mod 4) or the exponent is even;
// F1 matches when g = 3 (mod 4) and the exponent is odd.
inline residue interpolated_f2(p2_branch branch, i64 x, i64 c, const unit_decomposition& dec) {
    if (dec.one_unit.mod.odd()) throw invalid_input("interpolated_f2: requires p = 2");
    if (mod_floor(x, 2) == 0) throw even_x("interpolated_f2: x must be odd");
    residue r = mod_pow(dec.one_unit, x - 1 + c);
    return branch == p2_branch::f0 ? r : residue(-r.value, r.mod);
}

}  // namespace welch
