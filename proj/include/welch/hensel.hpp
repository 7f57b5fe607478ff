#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "welch/instance.hpp"

namespace welch {

/**
 * Generalized Hensel lifting: a simple root mod p of a function evaluable
 * at every intermediate precision lifts uniquely to a root mod p^e.
 *
 * Lifting is single-step (p, p^2, ..., p^e) rather than Newton-doubling;
 * e is small at desk scale and the full trace feeds test diagnostics.
 */

// Value of f at x in Z/p^kZ; must be callable at any precision k <= e and
// consistent under reduction.
using ring_function = std::function<i64(i64, const prime_power_modulus&)>;

struct lift_problem {
    prime_power_modulus target;
    ring_function f;
    ring_function f_prime;
    i64 base_root;  // mod p
};

struct lift_result {
    residue root;
    std::vector<i64> trace;  // intermediate roots mod p^2, ..., p^e
};

inline lift_result lift_simple_root(const lift_problem& prob) {
    const i64 p = prob.target.p();
    const prime_power_modulus mod_p(p, 1);
    i64 a = mod_floor(prob.base_root, p);
    if (prob.f(a, mod_p) != 0) throw not_a_root("lift_simple_root: f(base_root) != 0 (mod p)");
    if (prob.f_prime(a, mod_p) == 0) throw singular_root("lift_simple_root: f'(base_root) = 0 (mod p)");

    std::vector<i64> trace;
    trace.reserve(static_cast<size_t>(prob.target.e()) - 1);
    for (int k = 2; k <= prob.target.e(); ++k) {
        prime_power_modulus mod_k = prob.target.reduced(k);
        const i64 n = mod_k.value();
        i64 fa = prob.f(a, mod_k);
        i64 d = prob.f_prime(a, mod_k);
        a = mod_floor(a - mul_mod(fa, inv_mod(d, n), n), n);
        if (prob.f(a, mod_k) != 0) throw error("lift_simple_root: newton step failed, f is not liftable");
        trace.push_back(a);
    }
    return {residue(a, prob.target), trace};
}

// The unique x mod p^e with omega(g)^(x0) <g>^(x-1+c) = x.  Base root
// omega(g)^(x0) = g^(x0) (mod p); the derivative F*log<g> - 1 is -1 mod p,
// so the root is always simple.
inline residue lift_welch_fixed_c(const welch_instance& inst, i64 x0, i64 c) {
    if (!inst.mod.odd()) throw odd_prime_required("lift_welch_fixed_c: p must be odd");
    const i64 x0r = mod_floor(x0, inst.m);
    auto F = [&inst, x0r, c](i64 x, const prime_power_modulus& mk) {
        return interpolated_f(x0r, x, c, inst.dec.reduced(mk.e())).value;
    };
    lift_problem prob{
        inst.mod,
        [&F](i64 x, const prime_power_modulus& mk) { return mod_floor(F(x, mk) - x, mk.value()); },
        [&F, &inst](i64 x, const prime_power_modulus& mk) {
            i64 log_u = mod_floor(inst.log_one_unit.value, mk.value());
            return mod_floor(mul_mod(F(x, mk), log_u, mk.value()) - 1, mk.value());
        },
        pow_mod(inst.g.value, x0r, inst.p()),
    };
    return lift_simple_root(prob).root;
}

// All pairs (x, c) mod p^e above a base solution of
// omega(g)^(x0) <g>^(x-1+c) - x = 0 (mod p): c lifts freely (p^(e-1)
// choices, since df/dc = 0 mod p) and x is then pinned by the x-side lift
// (df/dx = -1 mod p).  The class x0 is recovered from the base pair by a
// discrete log mod p.  Representatives are returned in {1..p^e}.
inline std::vector<solution_pair> enumerate_bivariate_lifts(const welch_instance& inst, solution_pair base,
                                                            int target_e) {
    if (!inst.mod.odd()) throw odd_prime_required("enumerate_bivariate_lifts: p must be odd");
    if (target_e < 1 || target_e > inst.e()) throw invalid_input("enumerate_bivariate_lifts: bad target exponent");
    const i64 p = inst.p();
    const prime_power_modulus mod_p(p, 1);
    auto x0 = discrete_log(residue(inst.g.value, mod_p), residue(base.x, mod_p));
    if (!x0) throw not_a_root("enumerate_bivariate_lifts: base x is not a power of g mod p");

    const welch_instance work = target_e == inst.e() ? inst : welch_instance::create(p, target_e, inst.g.value);
    const i64 pe = work.mod.value();
    std::vector<solution_pair> out;
    for (i64 j = 0; j < pe / p; ++j) {
        i64 c = mod_floor(base.c, p) + j * p;
        i64 x = lift_welch_fixed_c(work, *x0, c).value;
        out.push_back({to_one_based(x, pe), to_one_based(c, pe)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace welch
