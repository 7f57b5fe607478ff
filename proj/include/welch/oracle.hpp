#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "welch/instance.hpp"

namespace welch::oracle {

/**
 * Brute-force reference implementations.  Everything here is a direct
 * exhaustive scan over the stated range using repeated multiplication and
 * canonical reduction only — no Hensel lifting, no interpolation, no CRT,
 * and no shared machinery with the constructive solvers beyond the scalar
 * mul_mod primitive.  Deliberately naive.
 */

// Hard limits for scans; exceeding them is an error, never a silent
// truncation.
struct scan_budget {
    i64 max_modulus = 10'000;
    i64 max_grid = 10'000'000;

    // WELCH_BUDGET="max_modulus" or "max_modulus,max_grid"
    static scan_budget from_env() {
        scan_budget b;
        if (const char* env = std::getenv("WELCH_BUDGET")) {
            char* rest = nullptr;
            long long v = std::strtoll(env, &rest, 10);
            if (v > 0) b.max_modulus = v;
            if (rest && *rest == ',') {
                long long grid = std::strtoll(rest + 1, nullptr, 10);
                if (grid > 0) b.max_grid = grid;
            }
        }
        return b;
    }
};

namespace detail {

inline void check_modulus(const prime_power_modulus& mod, const scan_budget& budget) {
    if (mod.value() > budget.max_modulus) throw budget_exceeded("oracle: modulus exceeds the scan budget");
}

inline void check_grid(i64 cells, const scan_budget& budget) {
    if (cells > budget.max_grid) throw budget_exceeded("oracle: grid exceeds the scan budget");
}

// g^t by square-and-multiply; negative t is folded up by the group order
// p^(e-1)(p-1) (Euler).
inline i64 naive_pow(i64 g, i64 t, const prime_power_modulus& mod) {
    const i64 n = mod.value();
    if (t < 0) {
        i64 phi = n / mod.p() * (mod.p() - 1);
        t = mod_floor(t, phi);
    }
    i64 acc = 1 % n;
    i64 b = mod_floor(g, n);
    while (t > 0) {
        if (t & 1) acc = mul_mod(acc, b, n);
        b = mul_mod(b, b, n);
        t >>= 1;
    }
    return acc;
}

// order of g mod p by plain repeated multiplication
inline i64 naive_order_mod_p(i64 g, i64 p) {
    i64 h = mod_floor(g, p);
    i64 k = 1;
    while (h != 1 % p) {
        h = mul_mod(h, mod_floor(g, p), p);
        ++k;
    }
    return k;
}

}  // namespace detail

// All x in [x_lo, x_hi] with g^(x-1+c) = x (mod p^e), by walking the range
// with one multiplication per step.
inline std::vector<i64> scan_fixed_c(const welch_instance& inst, i64 c, i64 x_lo, i64 x_hi,
                                     const scan_budget& budget = scan_budget::from_env()) {
    detail::check_modulus(inst.mod, budget);
    detail::check_grid(x_hi - x_lo + 1, budget);
    const i64 n = inst.mod.value();
    const i64 g = inst.g.value;
    std::vector<i64> out;
    i64 pw = detail::naive_pow(g, x_lo - 1 + c, inst.mod);
    for (i64 x = x_lo; x <= x_hi; ++x) {
        if (pw == mod_floor(x, n)) out.push_back(x);
        pw = mul_mod(pw, g, n);
    }
    return out;
}

inline std::vector<i64> scan_fixed_c(const welch_instance& inst, i64 c,
                                     const scan_budget& budget = scan_budget::from_env()) {
    i64 m = detail::naive_order_mod_p(inst.g.value, inst.p());
    return scan_fixed_c(inst, c, 1, m * inst.mod.value(), budget);
}

// Exhaustive grid scan over the canonical ranges x in {1..m p^e},
// c in {1..m p^(e-1)}.  Large grids are partitioned over the c range
// across workers; per-worker results are merged and sorted, so the output
// is identical to a serial scan.
inline std::vector<solution_pair> scan_all_pairs(const welch_instance& inst,
                                                 const scan_budget& budget = scan_budget::from_env()) {
    detail::check_modulus(inst.mod, budget);
    const i64 m = detail::naive_order_mod_p(inst.g.value, inst.p());
    const i64 x_hi = m * inst.mod.value();
    const i64 c_hi = m * (inst.mod.value() / inst.p());
    detail::check_grid(x_hi * c_hi, budget);
    const i64 n = inst.mod.value();
    const i64 g = inst.g.value;

    auto scan_chunk = [&](i64 c_lo, i64 c_end, std::vector<solution_pair>& chunk) {
        for (i64 c = c_lo; c <= c_end; ++c) {
            i64 pw = detail::naive_pow(g, c, inst.mod);  // x = 1
            for (i64 x = 1; x <= x_hi; ++x) {
                if (pw == mod_floor(x, n)) chunk.push_back({x, c});
                pw = mul_mod(pw, g, n);
            }
        }
    };

    unsigned workers = std::thread::hardware_concurrency();
    if (workers < 2 || x_hi * c_hi < 1'000'000 || c_hi < 8) {
        std::vector<solution_pair> out;
        scan_chunk(1, c_hi, out);
        std::sort(out.begin(), out.end());
        return out;
    }
    workers = std::min<unsigned>(workers, 8);
    std::vector<std::vector<solution_pair>> chunks(workers);
    std::vector<std::thread> pool;
    const i64 span = (c_hi + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        i64 lo = 1 + w * span;
        i64 hi = std::min<i64>(c_hi, lo + span - 1);
        if (lo > hi) continue;
        pool.emplace_back([&, lo, hi, w] { scan_chunk(lo, hi, chunks[w]); });
    }
    for (std::thread& t : pool) t.join();
    std::vector<solution_pair> out;
    for (const auto& chunk : chunks) out.insert(out.end(), chunk.begin(), chunk.end());
    std::sort(out.begin(), out.end());
    return out;
}

// {f(p, c) mod p : 1 <= c <= m} by direct evaluation.
inline std::set<i64> scan_value_set(const welch_instance& inst,
                                    const scan_budget& budget = scan_budget::from_env()) {
    detail::check_modulus(inst.mod, budget);
    const i64 p = inst.p();
    const i64 m = detail::naive_order_mod_p(inst.g.value, p);
    std::set<i64> out;
    for (i64 c = 1; c <= m; ++c) {
        i64 f = mod_floor(detail::naive_pow(inst.g.value, p - 1 + c, prime_power_modulus(p, 1)) - p, p);
        out.insert(f);
    }
    return out;
}

// Least k >= 0 with g^k = a, by walking the cycle of g.
inline std::optional<i64> scan_discrete_log(i64 g, i64 a, const prime_power_modulus& mod,
                                            const scan_budget& budget = scan_budget::from_env()) {
    detail::check_modulus(mod, budget);
    const i64 n = mod.value();
    if (mod_floor(g, mod.p()) == 0) throw non_unit("scan_discrete_log: g must be a unit");
    const i64 gv = mod_floor(g, n);
    const i64 av = mod_floor(a, n);
    i64 h = 1 % n;
    i64 k = 0;
    do {
        if (h == av) return k;
        h = mul_mod(h, gv, n);
        ++k;
    } while (h != 1 % n);
    return std::nullopt;
}

}  // namespace welch::oracle
