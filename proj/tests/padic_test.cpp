#include "welch/padic.hpp"

#include <gtest/gtest.h>

#include <array>
#include <vector>

using namespace welch;

namespace {

// Exhaustive sweep over prime-power moduli up to a bound.
template <typename Fn>
void for_each_modulus(i64 bound, Fn&& fn) {
    for (i64 p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        for (int e = 1; checked_pow(p, e) <= bound; ++e) fn(prime_power_modulus(p, e));
    }
}

TEST(Teichmuller, KnownValues) {
    prime_power_modulus m49(7, 2);
    // 2^7 = 128 = 30 (mod 49); 30 = 2 (mod 7), 30^3 = 1 (mod 49)
    residue w2 = teichmuller(2, m49);
    EXPECT_EQ(w2.value, 30);
    EXPECT_EQ(mod_pow(w2, 3).value, 1);
    // 3^7 = 2187 = 31 (mod 49); 31 = 3 (mod 7), 31^6 = 1 (mod 49)
    residue w3 = teichmuller(3, m49);
    EXPECT_EQ(w3.value, 31);
    EXPECT_EQ(mod_pow(w3, 6).value, 1);

    EXPECT_EQ(teichmuller(1, prime_power_modulus(5, 3)).value, 1);
    EXPECT_THROW(teichmuller(3, prime_power_modulus(2, 3)), odd_prime_required);
    EXPECT_THROW(teichmuller(7, m49), non_unit);
}

TEST(Teichmuller, RootOfUnityAndCongruenceExhaustive) {
    for_each_modulus(2000, [](const prime_power_modulus& mod) {
        if (!mod.odd()) return;
        for (i64 g = 1; g < mod.value(); ++g) {
            if (g % mod.p() == 0) continue;
            residue w = teichmuller(g, mod);
            ASSERT_EQ(mod_floor(w.value, mod.p()), mod_floor(g, mod.p()));
            ASSERT_EQ(mod_pow(w, mod.p() - 1).value, 1);
        }
    });
}

TEST(Teichmuller, Multiplicative) {
    for_each_modulus(500, [](const prime_power_modulus& mod) {
        if (!mod.odd()) return;
        for (i64 a = 1; a < mod.value(); ++a) {
            if (a % mod.p() == 0) continue;
            for (i64 b = a; b < mod.value(); ++b) {
                if (b % mod.p() == 0) continue;
                ASSERT_EQ(teichmuller(mul_mod(a, b, mod.value()), mod),
                          teichmuller(a, mod) * teichmuller(b, mod));
            }
        }
    });
}

TEST(DecomposeUnit, KnownValues) {
    prime_power_modulus m49(7, 2);
    unit_decomposition d = decompose_unit(2, m49);
    EXPECT_EQ(d.omega.value, 30);
    EXPECT_EQ((d.omega * d.one_unit).value, 2);
    EXPECT_EQ(mod_floor(d.one_unit.value, 7), 1);

    // 3 = 3 (mod 4) forces omega = -1; -3 = 5 (mod 8) and 5 = 1 (mod 4)
    unit_decomposition d2 = decompose_unit(3, prime_power_modulus(2, 3));
    EXPECT_EQ(d2.omega.value, 7);
    EXPECT_EQ(d2.one_unit.value, 5);

    unit_decomposition d3 = decompose_unit(1, prime_power_modulus(13, 2));
    EXPECT_EQ(d3.omega.value, 1);
    EXPECT_EQ(d3.one_unit.value, 1);

    EXPECT_THROW(decompose_unit(4, prime_power_modulus(2, 3)), non_unit);
}

TEST(DecomposeUnit, InvariantsExhaustive) {
    for_each_modulus(2000, [](const prime_power_modulus& mod) {
        for (i64 g = 1; g < mod.value(); ++g) {
            if (g % mod.p() == 0) continue;
            unit_decomposition d = decompose_unit(g, mod);
            ASSERT_EQ((d.omega * d.one_unit).value, g);
            if (mod.odd()) {
                ASSERT_EQ(mod_pow(d.omega, mod.p() - 1).value, 1);
                ASSERT_EQ(mod_floor(d.one_unit.value, mod.p()), 1);
            } else {
                ASSERT_TRUE(d.omega.value == 1 || d.omega.value == mod.value() - 1);
                if (mod.e() >= 2) ASSERT_EQ(mod_floor(d.one_unit.value, 4), 1);
            }
        }
    });
}

TEST(PadicLog, KnownValues) {
    // log(8) mod 7^3: 7 - 49/2 = 7 + 147 = 154 (2^-1 = 172 mod 343)
    prime_power_modulus m343(7, 3);
    padic_series_value l = padic_log(residue(8, m343));
    EXPECT_EQ(l.value.value, 154);
    EXPECT_GE(l.valuation_floor, 1);
    EXPECT_EQ(l.value.value % checked_pow(7, l.valuation_floor), 0);  // p^floor divides the value

    EXPECT_EQ(padic_log(residue(1, m343)).value.value, 0);
    EXPECT_THROW(padic_log(residue(6, prime_power_modulus(7, 2))), domain_error);
    EXPECT_THROW(padic_log(residue(3, prime_power_modulus(2, 3))), domain_error);
}

TEST(PadicExp, KnownValues) {
    prime_power_modulus m343(7, 3);
    // 1 + 154 + 154^2/2 = 1 + 154 + 196 = 8 (mod 343)
    EXPECT_EQ(padic_exp_value(residue(154, m343)).value, 8);
    EXPECT_EQ(padic_exp_value(residue(0, m343)).value, 1);
    // term n=2 is 49/2 = 0 (mod 49)
    EXPECT_EQ(padic_exp_value(residue(7, prime_power_modulus(7, 2))).value, 8);
    EXPECT_THROW(padic_exp_value(residue(3, prime_power_modulus(7, 2))), domain_error);
    EXPECT_THROW(padic_exp_value(residue(2, prime_power_modulus(2, 4))), domain_error);
}

TEST(PadicLogExp, RoundTripExhaustive) {
    for_each_modulus(2000, [](const prime_power_modulus& mod) {
        const i64 p = mod.p();
        const i64 n = mod.value();
        const i64 step = mod.odd() ? p : 4;
        if (n < step) return;
        // one-units u: exp(log u) = u
        for (i64 u = 1; u < n; u += step) {
            residue ur(u, mod);
            padic_series_value l = padic_log(ur);
            ASSERT_EQ(padic_exp(l), ur) << "u=" << u << " mod " << n;
        }
        // valid arguments x: log(exp x) = x
        const i64 xstep = mod.odd() ? p : 4;
        for (i64 x = 0; x < n; x += xstep) {
            residue xr(x, mod);
            ASSERT_EQ(padic_log(padic_exp_value(xr)).value, xr) << "x=" << x << " mod " << n;
        }
    });
}

TEST(PadicLog, Homomorphism) {
    for_each_modulus(1000, [](const prime_power_modulus& mod) {
        const i64 n = mod.value();
        const i64 step = mod.odd() ? mod.p() : 4;
        if (n < step) return;
        for (i64 u = 1; u < n; u += step)
            for (i64 v = u; v < n; v += step) {
                residue prod(mul_mod(u, v, n), mod);
                ASSERT_EQ(padic_log(prod).value,
                          padic_log(residue(u, mod)).value + padic_log(residue(v, mod)).value);
            }
    });
}

TEST(InterpolatedF, AgreementOnResidueClass) {
    // F_{x0}(x) = g^(x-1+c) whenever x-1+c = x0 (mod m)
    for (auto [p, e, g] : std::vector<std::array<i64, 3>>{{7, 1, 2}, {7, 2, 2}, {5, 3, 2}, {11, 2, 3}, {13, 1, 6}}) {
        prime_power_modulus mod(p, static_cast<int>(e));
        unit_decomposition dec = decompose_unit(g, mod);
        i64 m = multiplicative_order(residue(g, prime_power_modulus(p, 1)));
        for (i64 c = 1; c <= 2 * m; ++c)
            for (i64 x = 1; x <= 3 * m; ++x) {
                i64 x0 = mod_floor(x - 1 + c, m);
                ASSERT_EQ(interpolated_f(x0, x, c, dec), mod_pow(residue(g, mod), x - 1 + c));
            }
    }
}

TEST(InterpolatedF, KnownValues) {
    // x0 = 2 but x-1+c = 4 = 1 (mod 3): F differs from g^4
    prime_power_modulus m7(7, 1);
    unit_decomposition dec = decompose_unit(2, m7);
    residue f = interpolated_f(2, 3, 2, dec);
    EXPECT_EQ(f.value, 4);  // omega(2)^2 <2>^4 = 2^2 * 1 = 4 (mod 7)
    EXPECT_NE(f, mod_pow(residue(2, m7), 4));

    unit_decomposition dec1 = decompose_unit(1, prime_power_modulus(5, 2));
    EXPECT_EQ(interpolated_f(0, 1, 1, dec1).value, 1);

    EXPECT_THROW(interpolated_f(0, 1, 1, decompose_unit(3, prime_power_modulus(2, 3))), odd_prime_required);
}

TEST(InterpolatedF2, BranchRule) {
    // g = 5 = 1 (mod 4): F0 matches for every exponent
    prime_power_modulus m8(2, 3);
    unit_decomposition d5 = decompose_unit(5, m8);
    for (i64 x = 1; x <= 15; x += 2)
        for (i64 c = 0; c <= 6; ++c)
            ASSERT_EQ(interpolated_f2(p2_branch::f0, x, c, d5), mod_pow(residue(5, m8), x - 1 + c));

    // g = 3 (mod 4), odd exponent: F1 matches; 3^3 = 3 (mod 8)
    unit_decomposition d3 = decompose_unit(3, m8);
    EXPECT_EQ(interpolated_f2(p2_branch::f1, 3, 1, d3).value, 3);

    EXPECT_THROW(interpolated_f2(p2_branch::f0, 2, 1, d3), even_x);
}

TEST(InterpolatedF2, ExactlyOneBranchMatches) {
    for (int e = 1; e <= 7; ++e) {
        prime_power_modulus mod(2, e);
        for (i64 g = 1; g < mod.value(); g += 2) {
            unit_decomposition dec = decompose_unit(g, mod);
            for (i64 x = 1; x <= 9; x += 2)
                for (i64 c = 0; c <= 5; ++c) {
                    residue truth = mod_pow(residue(g, mod), x - 1 + c);
                    bool f1_selected = e >= 2 && mod_floor(g, 4) == 3 && mod_floor(x - 1 + c, 2) == 1;
                    residue selected = interpolated_f2(f1_selected ? p2_branch::f1 : p2_branch::f0, x, c, dec);
                    ASSERT_EQ(selected, truth) << "g=" << g << " x=" << x << " c=" << c << " e=" << e;
                    if (e >= 2) {
                        residue other = interpolated_f2(f1_selected ? p2_branch::f0 : p2_branch::f1, x, c, dec);
                        ASSERT_NE(other, truth);
                    }
                }
        }
    }
}

}  // namespace
