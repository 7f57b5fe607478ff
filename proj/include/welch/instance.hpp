#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "welch/padic.hpp"

namespace welch {

// The problem statement g^(x-1+c) = x (mod p^e), together with the derived
// constants every solver needs: m = ord_p(g), ord_{p^e}(g), and the unit
// decomposition of g (with log<g>) at full precision.
struct welch_instance {
    prime_power_modulus mod;
    residue g;
    i64 m;
    i64 ord_pe;
    unit_decomposition dec;
    residue log_one_unit;

    static welch_instance create(i64 p, int e, i64 g_value) {
        prime_power_modulus mod(p, e);
        residue g(g_value, mod);
        if (!g.is_unit()) {
            if (p == 2) throw even_g("welch_instance: g must be odd when p = 2");
            throw non_unit("welch_instance: g must be a unit modulo p");
        }
        i64 m = multiplicative_order(residue(g.value, prime_power_modulus(p, 1)));
        i64 ord_pe = multiplicative_order(g);
        unit_decomposition dec = decompose_unit(g.value, mod);
        residue log_u = padic_log(dec.one_unit).value;
        return welch_instance{mod, g, m, ord_pe, dec, log_u};
    }

    i64 p() const { return mod.p(); }
    int e() const { return mod.e(); }

    // canonical ranges x in {1..m p^e}, c in {1..m p^(e-1)}
    i64 x_range() const { return checked_mul(m, mod.value()); }
    i64 c_range() const { return checked_mul(m, mod.value() / mod.p()); }

    welch_instance inverse() const { return create(p(), e(), mod_inverse(g).value); }

private:
    static i64 checked_mul(i64 a, i64 b) {
        if (b != 0 && a > max_supported_modulus / b) throw invalid_input("welch_instance: range exceeds supported size");
        return a * b;
    }
};

struct solution_pair {
    i64 x;
    i64 c;

    friend auto operator<=>(const solution_pair&, const solution_pair&) = default;
};

// {f(p, c) mod p : 1 <= c <= m} = {g^c mod p}; exactly the x mod p that
// admit solutions.
struct value_set {
    std::set<i64> values;
    i64 generating_c_range;  // c runs over {1..m}
};

struct solution_report {
    std::string query;  // "fixed-c" | "all-pairs" | "p2"
    std::vector<solution_pair> solutions;
    i64 predicted_count;
    std::string predicted_formula;
    i64 observed_count;
    std::string claim;  // the counting statement this report instantiates
};

}  // namespace welch
