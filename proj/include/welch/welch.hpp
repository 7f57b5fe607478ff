#pragma once

#include <algorithm>
#include <map>

#include "welch/hensel.hpp"

namespace welch {

/**
 * The Welch function f(x, c) = g^(x-1+c) - x (mod p^e), its periodicity and
 * symmetry laws, value sets, and the constructive solvers with their
 * predicted counts.
 */

// Canonical residue of g^(x-1+c) - x.  The exponent is reduced modulo
// ord_{p^e}(g) before powering; tests compare against unreduced powering.
inline residue welch_f(const welch_instance& inst, i64 x, i64 c) {
    i64 t = mod_floor(x - 1 + c, inst.ord_pe);
    return residue(pow_mod(inst.g.value, t, inst.mod.value()) - mod_floor(x, inst.mod.value()), inst.mod);
}

// Guaranteed period of f in c: m * p^(e-1).  Not necessarily minimal —
// the minimal period is ord_{p^e}(g), which can be smaller (instance.ord_pe
// exposes it); no minimality is claimed here.
inline i64 c_period(const welch_instance& inst) { return inst.c_range(); }

// Period of f in x: m * p^e.
inline i64 x_period(const welch_instance& inst) { return inst.x_range(); }

// {f(p, c) mod p : 1 <= c <= m} = {g^c mod p}.
inline value_set value_set_at_p(const welch_instance& inst) {
    if (!inst.mod.odd()) throw odd_prime_required("value_set_at_p: p must be odd");
    const i64 p = inst.p();
    std::set<i64> vals;
    i64 pw = pow_mod(inst.g.value, p - 1 + 1, p);  // f(p, c) + p = g^(p-1+c), walked over c
    for (i64 c = 1; c <= inst.m; ++c) {
        vals.insert(mod_floor(pw - p, p));
        pw = mul_mod(pw, mod_floor(inst.g.value, p), p);
    }
    if (static_cast<i64>(vals.size()) != inst.m) throw error("value_set_at_p: powers of g collided within one period");
    return {std::move(vals), inst.m};
}

// Exactly the x mod p admitting solutions; each member is verified to have
// one and only one c' in {1..m} by substitution search (the closed form in
// terms of c and x is asserted in tests, not trusted here).
inline std::set<i64> solution_xs_mod_p(const welch_instance& inst) {
    value_set vs = value_set_at_p(inst);
    const i64 p = inst.p();
    const i64 gp = mod_floor(inst.g.value, p);
    for (i64 x : vs.values) {
        int hits = 0;
        i64 pw = pow_mod(gp, mod_floor(x, inst.m), p);  // g^(x-1+c') at c' = 1
        for (i64 cp = 1; cp <= inst.m; ++cp) {
            if (pw == mod_floor(x, p)) ++hits;
            pw = mul_mod(pw, gp, p);
        }
        if (hits != 1) throw error("solution_xs_mod_p: value-set member without a unique c'");
    }
    return vs.values;
}

inline bool has_primitive_g(const welch_instance& inst) {
    return inst.mod.odd() && inst.ord_pe == inst.mod.unit_group_order();
}

// For primitive g: the unique c in {1..p^(e-1)(p-1)} solving
// g^(x-1+c) = x, namely c = (k+1) - x where x = g^k.  Verified by
// substitution before returning.
inline i64 unique_c_for_x(const welch_instance& inst, i64 x) {
    if (!has_primitive_g(inst)) throw not_primitive_root("unique_c_for_x: g must be a primitive root mod p^e");
    residue xr(x, inst.mod);
    if (!xr.is_unit()) throw non_unit_x("unique_c_for_x: x must be a unit");
    const i64 order = inst.mod.unit_group_order();
    i64 k = *discrete_log(inst.g, xr);
    i64 c = to_one_based(k + 1 - x, order);
    if (mod_pow(inst.g, x - 1 + c).value != xr.value) throw error("unique_c_for_x: substitution check failed");
    return c;
}

// c at the corner solution x = p^e - 1: (p^(e-1)(p-3) + 4) / 2.
inline i64 corner_c(const welch_instance& inst) {
    return ((inst.mod.value() / inst.p()) * (inst.p() - 3) + 4) / 2;
}

// The reflected pair (p^e - x, c') solving the same equation for g^(-1),
// with c' = corner_c - c mod p^(e-1)(p-1).  Involutive up to the period.
inline solution_pair inverse_pair(const welch_instance& inst, solution_pair pair) {
    if (!has_primitive_g(inst)) throw not_primitive_root("inverse_pair: g must be a primitive root mod p^e");
    if (welch_f(inst, pair.x, pair.c).value != 0) throw not_a_solution("inverse_pair: input pair is not a solution");
    solution_pair out{inst.mod.value() - pair.x, to_one_based(corner_c(inst) - pair.c, inst.mod.unit_group_order())};
    if (welch_f(inst.inverse(), out.x, out.c).value != 0) throw error("inverse_pair: verification failed");
    return out;
}

// (x0 + n p^e, c0 - n p^(e-1)) stays a solution when (x0, c0) is one.
inline solution_pair shift_solution(const welch_instance& inst, solution_pair pair, i64 n) {
    if (welch_f(inst, pair.x, pair.c).value != 0) throw not_a_solution("shift_solution: input pair is not a solution");
    solution_pair out{pair.x + n * inst.mod.value(), to_one_based(pair.c - n * (inst.mod.value() / inst.p()), inst.c_range())};
    if (welch_f(inst, out.x, out.c).value != 0) throw error("shift_solution: verification failed");
    return out;
}

// Number of c in {1..m p^(e-1)} solving g^(x-1+c) = x for fixed x:
// m p^(e-1) / ord_{p^e}(g) when log_g(x) exists, else 0.
inline i64 count_c_for_fixed_x(const welch_instance& inst, i64 x) {
    residue xr(x, inst.mod);
    if (!xr.is_unit()) throw non_unit_x("count_c_for_fixed_x: x must be a unit");
    return discrete_log(inst.g, xr) ? inst.c_range() / inst.ord_pe : 0;
}

// The c values themselves: c = log_g(x) - x + 1 (mod ord_{p^e}(g)),
// enumerated over {1..m p^(e-1)}.
inline std::vector<i64> c_values_for_fixed_x(const welch_instance& inst, i64 x) {
    residue xr(x, inst.mod);
    if (!xr.is_unit()) throw non_unit_x("c_values_for_fixed_x: x must be a unit");
    auto k = discrete_log(inst.g, xr);
    std::vector<i64> out;
    if (!k) return out;
    for (i64 c = to_one_based(*k - x + 1, inst.ord_pe); c <= inst.c_range(); c += inst.ord_pe) out.push_back(c);
    return out;
}

namespace detail {

inline void verify_report(const welch_instance& inst, const solution_report& report) {
    for (const solution_pair& s : report.solutions) {
        if (welch_f(inst, s.x, s.c).value != 0) throw error("solver produced a non-solution");
        if (mod_floor(s.x, inst.p()) == 0) throw error("solver produced an x divisible by p");
    }
}

}  // namespace detail

// The k*m solutions x in {1..k m p^e} for fixed c, built from one Hensel
// lift per class x0 in Z/mZ glued by the CRT (x = x0 + 1 - c mod m,
// x = x1 mod p^e) and translated through the x-period.
inline solution_report solve_fixed_c(const welch_instance& inst, i64 c, i64 range_multiplier = 1) {
    if (!inst.mod.odd()) throw odd_prime_required("solve_fixed_c: p must be odd (use solve_p2)");
    if (range_multiplier < 1) throw invalid_input("solve_fixed_c: range multiplier must be >= 1");
    const i64 pe = inst.mod.value();
    const i64 period = inst.x_range();

    std::vector<i64> base;
    for (i64 x0 = 0; x0 < inst.m; ++x0) {
        i64 x1 = lift_welch_fixed_c(inst, x0, c).value;
        i64 x = crt_pair(x1, pe, mod_floor(x0 + 1 - c, inst.m), inst.m);
        base.push_back(to_one_based(x, period));
    }
    std::set<i64> classes_mod_m;
    for (i64 x : base) classes_mod_m.insert(mod_floor(x, inst.m));
    if (static_cast<i64>(classes_mod_m.size()) != inst.m) throw error("solve_fixed_c: solutions not distinct mod m");

    std::vector<solution_pair> sols;
    for (i64 j = 0; j < range_multiplier; ++j)
        for (i64 x : base) sols.push_back({x + j * period, c});
    std::sort(sols.begin(), sols.end());

    solution_report report{"fixed-c",
                           std::move(sols),
                           range_multiplier * inst.m,
                           range_multiplier == 1 ? "m" : "k*m",
                           0,
                           "exactly k*m solutions x in {1..k*m*p^e} for fixed c"};
    report.observed_count = static_cast<i64>(report.solutions.size());
    detail::verify_report(inst, report);
    return report;
}

// All m^2 p^(e-1) pairs on the canonical grid.  Pairs are generated over
// the full c range {1..m p^e} (one CRT-glued lift per class x0) and folded
// through the c-period m p^(e-1); the fold must collapse exactly p
// generated pairs onto each canonical one.
inline solution_report solve_all_pairs(const welch_instance& inst) {
    if (!inst.mod.odd()) throw odd_prime_required("solve_all_pairs: p must be odd");
    const i64 pe = inst.mod.value();
    const i64 fold = inst.c_range();

    std::map<solution_pair, i64> hits;
    for (i64 c = 1; c <= inst.m * pe; ++c)
        for (i64 x0 = 0; x0 < inst.m; ++x0) {
            i64 x1 = lift_welch_fixed_c(inst, x0, c).value;
            i64 x = to_one_based(crt_pair(x1, pe, mod_floor(x0 + 1 - c, inst.m), inst.m), inst.x_range());
            ++hits[{x, to_one_based(c, fold)}];
        }
    std::vector<solution_pair> sols;
    sols.reserve(hits.size());
    for (const auto& [pair, count] : hits) {
        if (count != inst.p()) throw error("solve_all_pairs: c-period fold lost or duplicated pairs");
        sols.push_back(pair);
    }

    solution_report report{"all-pairs",
                           std::move(sols),
                           inst.m * inst.m * (pe / inst.p()),
                           inst.e() == 1 ? "m^2" : "m^2*p^(e-1)",
                           0,
                           "m^2*p^(e-1) solution pairs (x, c) on the canonical grid"};
    report.observed_count = static_cast<i64>(report.solutions.size());
    detail::verify_report(inst, report);
    return report;
}

// p = 2: the unique (odd) solution x in {1..2^e} for fixed c, built by
// lifting the branch of the interpolation selected by g mod 4 and the
// parity of c (odd x forces x-1+c = c mod 2).
inline solution_report solve_p2(const welch_instance& inst, i64 c) {
    if (inst.mod.odd()) throw invalid_input("solve_p2: requires p = 2");
    const bool f1 = inst.e() >= 2 && mod_floor(inst.g.value, 4) == 3 && mod_floor(c, 2) == 1;
    const p2_branch branch = f1 ? p2_branch::f1 : p2_branch::f0;

    auto F = [&inst, branch, c](i64 x, const prime_power_modulus& mk) {
        return interpolated_f2(branch, x, c, inst.dec.reduced(mk.e())).value;
    };
    lift_problem prob{
        inst.mod,
        [&F](i64 x, const prime_power_modulus& mk) { return mod_floor(F(x, mk) - x, mk.value()); },
        [&F, &inst](i64 x, const prime_power_modulus& mk) {
            i64 log_u = mod_floor(inst.log_one_unit.value, mk.value());
            return mod_floor(mul_mod(F(x, mk), log_u, mk.value()) - 1, mk.value());
        },
        1,
    };
    i64 x = lift_simple_root(prob).root.value;
    if (x % 2 == 0) throw error("solve_p2: produced an even solution");

    solution_report report{"p2",
                           {{x, c}},
                           1,
                           "1",
                           1,
                           "exactly one odd solution x in {1..2^e} for fixed c"};
    detail::verify_report(inst, report);
    return report;
}

// All (x, c) in one full period with f(x, c) = f(x + 1, c).  Each hit is
// cross-checked against the rearrangement g^(x-1+c) (g - 1) = 1.
inline std::vector<solution_pair> find_doubles(const welch_instance& inst) {
    const i64 pe = inst.mod.value();
    std::vector<solution_pair> out;
    for (i64 c = 1; c <= inst.c_range(); ++c) {
        i64 pw = pow_mod(inst.g.value, mod_floor(c, inst.ord_pe), pe);  // g^(x-1+c) at x = 1
        for (i64 x = 1; x <= inst.x_range(); ++x) {
            i64 next = mul_mod(pw, inst.g.value, pe);  // g^(x+c)
            i64 fx = mod_floor(pw - x, pe);
            i64 fx1 = mod_floor(next - (x + 1), pe);
            if (fx == fx1) {
                if (mul_mod(pw, mod_floor(inst.g.value - 1, pe), pe) != 1 % pe)
                    throw error("find_doubles: characterization g^(x-1+c)(g-1) = 1 failed");
                out.push_back({x, c});
            }
            pw = next;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace welch
