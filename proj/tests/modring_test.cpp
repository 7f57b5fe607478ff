#include "welch/modring.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "welch/oracle.hpp"

using namespace welch;

namespace {

residue res(i64 v, i64 p, int e) { return residue(v, prime_power_modulus(p, e)); }

TEST(PrimePowerModulus, ConstructionAndValidation) {
    prime_power_modulus m(7, 2);
    EXPECT_EQ(m.p(), 7);
    EXPECT_EQ(m.e(), 2);
    EXPECT_EQ(m.value(), 49);
    EXPECT_EQ(m.unit_group_order(), 42);

    EXPECT_THROW(prime_power_modulus(6, 1), invalid_input);
    EXPECT_THROW(prime_power_modulus(1, 1), invalid_input);
    EXPECT_THROW(prime_power_modulus(7, 0), invalid_input);
    EXPECT_THROW(prime_power_modulus(2, 63), invalid_input);
}

TEST(Residue, Canonicalization) {
    EXPECT_EQ(res(-1, 7, 1).value, 6);
    EXPECT_EQ(res(50, 7, 2).value, 1);
    EXPECT_EQ(res(0, 7, 1).value, 0);
    EXPECT_TRUE(res(3, 7, 2).is_unit());
    EXPECT_FALSE(res(14, 7, 2).is_unit());
}

TEST(ModPow, KnownValues) {
    EXPECT_EQ(mod_pow(res(2, 7, 1), 8).value, 4);
    for (i64 g : {1, 2, 3, 4, 5, 6}) EXPECT_EQ(mod_pow(res(g, 7, 1), 0).value, 1);
    // 5^(-1) = 3 mod 7 (extended Euclid: 5*3 = 15 = 2*7 + 1)
    EXPECT_EQ(mod_pow(res(5, 7, 1), -1).value, 3);
    EXPECT_THROW(mod_pow(res(7, 7, 2), -1), non_unit_base);
    EXPECT_THROW(mod_pow(res(2, 7, 1), std::numeric_limits<i64>::min()), invalid_input);
}

TEST(ModInverse, KnownValues) {
    EXPECT_EQ(mod_inverse(res(2, 7, 1)).value, 4);
    // 3*81 = 243 = 2*121 + 1
    EXPECT_EQ(mod_inverse(res(3, 11, 2)).value, 81);
    EXPECT_THROW(mod_inverse(res(7, 7, 2)), non_unit);
}

TEST(ModInverse, InvolutionProperty) {
    std::mt19937_64 rng(7);
    for (auto [p, e] : std::vector<std::pair<i64, int>>{{3, 4}, {7, 2}, {2, 9}, {101, 1}, {13, 3}}) {
        prime_power_modulus mod(p, e);
        for (int i = 0; i < 200; ++i) {
            residue a(static_cast<i64>(rng() % u64(mod.value())), mod);
            if (!a.is_unit()) continue;
            EXPECT_EQ(mod_inverse(mod_inverse(a)), a);
            EXPECT_EQ((a * mod_inverse(a)).value, 1);
        }
    }
}

TEST(MultiplicativeOrder, KnownValues) {
    EXPECT_EQ(multiplicative_order(res(2, 7, 1)), 3);
    EXPECT_EQ(multiplicative_order(res(3, 11, 2)), 5);
    EXPECT_EQ(multiplicative_order(res(1, 7, 2)), 1);
    EXPECT_EQ(multiplicative_order(res(1, 2, 5)), 1);
    EXPECT_THROW(multiplicative_order(res(14, 7, 2)), non_unit);
}

// g^ord = 1 and no smaller positive exponent, checked against a direct scan.
TEST(MultiplicativeOrder, MinimalityExhaustiveSmallModuli) {
    for (i64 p : {2, 3, 5, 7, 11, 13}) {
        for (int e = 1; checked_pow(p, e) <= 300; ++e) {
            prime_power_modulus mod(p, e);
            for (i64 g = 1; g < mod.value(); ++g) {
                residue gr(g, mod);
                if (!gr.is_unit()) continue;
                i64 ord = multiplicative_order(gr);
                EXPECT_EQ(mod_pow(gr, ord).value, 1);
                EXPECT_EQ(mod.unit_group_order() % ord, 0);  // Lagrange
                i64 h = 1;
                for (i64 k = 1; k < ord; ++k) {
                    h = mul_mod(h, g, mod.value());
                    ASSERT_NE(h, 1) << "order not minimal for g=" << g << " mod " << mod.value();
                }
            }
        }
    }
}

TEST(DiscreteLog, KnownValues) {
    EXPECT_EQ(discrete_log(res(3, 11, 2), res(1, 11, 2)), std::optional<i64>(0));
    // powers of 3 mod 121 are {1, 3, 9, 27, 81}: no logarithm for 2
    EXPECT_EQ(discrete_log(res(3, 11, 2), res(2, 11, 2)), std::nullopt);
    EXPECT_EQ(discrete_log(res(3, 7, 1), res(6, 7, 1)), std::optional<i64>(3));
    EXPECT_THROW(discrete_log(res(7, 7, 2), res(1, 7, 2)), non_unit);
    EXPECT_THROW(discrete_log(res(1, 7, 2), res(7, 7, 2)), non_unit);
}

TEST(DiscreteLog, MatchesNaiveScanAndContract) {
    for (auto [p, e] : std::vector<std::pair<i64, int>>{{2, 6}, {3, 4}, {5, 3}, {7, 2}, {11, 2}, {97, 1}, {13, 2}}) {
        prime_power_modulus mod(p, e);
        for (i64 g = 1; g < mod.value(); ++g) {
            if (g % p == 0) continue;
            residue gr(g, mod);
            i64 ord = multiplicative_order(gr);
            for (i64 a = 1; a < mod.value(); ++a) {
                if (a % p == 0) continue;
                residue ar(a, mod);
                auto fast = discrete_log(gr, ar);
                auto slow = oracle::scan_discrete_log(g, a, mod);
                ASSERT_EQ(fast, slow) << "g=" << g << " a=" << a << " mod " << mod.value();
                if (fast) {
                    EXPECT_EQ(mod_pow(gr, *fast), ar);
                    EXPECT_LT(*fast, ord);
                    EXPECT_GE(*fast, 0);
                }
            }
        }
    }
}

TEST(IsPrimitiveRoot, KnownValues) {
    EXPECT_TRUE(is_primitive_root(res(3, 7, 1)));
    EXPECT_FALSE(is_primitive_root(res(2, 7, 1)));
    EXPECT_FALSE(is_primitive_root(res(1, 7, 1)));
    EXPECT_THROW(is_primitive_root(res(3, 2, 3)), odd_prime_required);
    EXPECT_THROW(is_primitive_root(res(7, 7, 1)), non_unit);
}

TEST(Arith, CrtPair) {
    // x = 3 mod 7, x = 2 mod 5 -> 17 mod 35
    EXPECT_EQ(crt_pair(3, 7, 2, 5), 17);
    EXPECT_EQ(crt_pair(4, 9, 4, 1), 4);
    EXPECT_THROW(crt_pair(1, 6, 1, 4), invalid_input);
}

}  // namespace
