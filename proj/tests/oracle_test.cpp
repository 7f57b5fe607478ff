#include "welch/oracle.hpp"

#include <gtest/gtest.h>

using namespace welch;

namespace {

TEST(ScanFixedC, KnownValues) {
    welch_instance i7 = welch_instance::create(7, 1, 2);
    EXPECT_EQ(oracle::scan_fixed_c(i7, 3, 1, 21), (std::vector<i64>{1, 2, 18}));

    welch_instance i8 = welch_instance::create(2, 3, 3);
    EXPECT_EQ(oracle::scan_fixed_c(i8, 1, 1, 8), (std::vector<i64>{3}));

    welch_instance ione = welch_instance::create(5, 2, 1);
    EXPECT_EQ(oracle::scan_fixed_c(ione, 9, 1, 25), (std::vector<i64>{1}));
}

TEST(ScanAllPairs, KnownValues) {
    welch_instance i7 = welch_instance::create(7, 1, 2);
    std::vector<solution_pair> pairs = oracle::scan_all_pairs(i7);
    EXPECT_EQ(pairs.size(), 9u);
    std::set<solution_pair> set(pairs.begin(), pairs.end());
    EXPECT_TRUE(set.count({1, 3}));
    EXPECT_TRUE(set.count({2, 3}));
    EXPECT_TRUE(set.count({4, 2}));

    EXPECT_EQ(oracle::scan_all_pairs(welch_instance::create(3, 2, 2)).size(), 12u);

    // g = 1: exactly the pairs with x = 1 (mod p^e)
    welch_instance ione = welch_instance::create(5, 1, 1);
    for (const solution_pair& s : oracle::scan_all_pairs(ione)) EXPECT_EQ(mod_floor(s.x, 5), 1);
}

TEST(ScanValueSet, KnownValues) {
    EXPECT_EQ(oracle::scan_value_set(welch_instance::create(7, 1, 2)), (std::set<i64>{1, 2, 4}));
    // 5 has order 6 mod 7, so the powers sweep every unit
    EXPECT_EQ(oracle::scan_value_set(welch_instance::create(7, 1, 5)), (std::set<i64>{1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(oracle::scan_value_set(welch_instance::create(11, 1, 1)), (std::set<i64>{1}));
}

TEST(ScanDiscreteLog, KnownValues) {
    prime_power_modulus m121(11, 2);
    EXPECT_EQ(oracle::scan_discrete_log(3, 2, m121), std::nullopt);
    EXPECT_EQ(oracle::scan_discrete_log(3, 81, m121), std::optional<i64>(4));
    EXPECT_EQ(oracle::scan_discrete_log(3, 1, m121), std::optional<i64>(0));
    EXPECT_THROW(oracle::scan_discrete_log(11, 1, m121), non_unit);
}

TEST(ScanBudget, RejectsOversizedScans) {
    oracle::scan_budget tight{100, 50};
    welch_instance big = welch_instance::create(11, 2, 3);
    EXPECT_THROW(oracle::scan_fixed_c(big, 1, 1, 10, tight), budget_exceeded);  // modulus 121 > 100
    welch_instance small = welch_instance::create(7, 1, 3);
    EXPECT_THROW(oracle::scan_fixed_c(small, 1, 1, 51, tight), budget_exceeded);  // grid 51 > 50
    EXPECT_NO_THROW(oracle::scan_fixed_c(small, 1, 1, 50, tight));
    EXPECT_THROW(oracle::scan_all_pairs(small, tight), budget_exceeded);  // 42*6 = 252 > 50
}

TEST(ScanBudget, EnvOverride) {
    setenv("WELCH_BUDGET", "123", 1);
    oracle::scan_budget b = oracle::scan_budget::from_env();
    EXPECT_EQ(b.max_modulus, 123);
    EXPECT_EQ(b.max_grid, 10'000'000);

    setenv("WELCH_BUDGET", "55,777", 1);
    b = oracle::scan_budget::from_env();
    EXPECT_EQ(b.max_modulus, 55);
    EXPECT_EQ(b.max_grid, 777);

    unsetenv("WELCH_BUDGET");
    b = oracle::scan_budget::from_env();
    EXPECT_EQ(b.max_modulus, 10'000);
}

}  // namespace
