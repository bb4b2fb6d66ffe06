#include "schur_div/number_theory.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace schur_div {
namespace {

TEST(NumberTheory, PrimalityMatchesTrialDivision) {
    for (std::uint64_t n = 0; n < 20000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime_naive(n)) << n;
}

TEST(NumberTheory, LargePrimes) {
    EXPECT_TRUE(is_prime(18446744073709551557ull));  // largest 64-bit prime
    EXPECT_FALSE(is_prime(18446744073709551557ull - 2));
    EXPECT_TRUE(is_prime(1000000007));
    EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(NumberTheory, PowmodAgreesWithRepeatedMultiplication) {
    for (std::uint64_t m : {2ull, 7ull, 97ull, 1000003ull}) {
        for (std::uint64_t b = 0; b < 30; ++b) {
            std::uint64_t v = 1 % m;
            for (std::uint64_t e = 0; e < 40; ++e) {
                EXPECT_EQ(powmod(b, e, m), v);
                v = v * b % m;
            }
        }
    }
    EXPECT_EQ(powmod(5, 3, 1), 0u);
}

TEST(NumberTheory, SegmentSieveMatchesPlainSieve) {
    const auto all = primes_up_to(50000);
    const auto base = sieving_primes_for(50000);
    std::vector<std::uint64_t> joined;
    for (std::uint64_t lo = 0; lo <= 50000; lo += 4096) {
        for (auto p : primes_in_segment(lo, std::min<std::uint64_t>(lo + 4095, 50000), base)) joined.push_back(p);
    }
    ASSERT_EQ(joined.size(), all.size());
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(joined[i], all[i]);
}

TEST(NumberTheory, IntegerSquareRoot) {
    EXPECT_EQ(isqrt(0), 0u);
    EXPECT_EQ(isqrt(15), 3u);
    EXPECT_EQ(isqrt(16), 4u);
    EXPECT_EQ(isqrt(UINT64_MAX), 4294967295u);
}

TEST(NumberTheory, FactorizeRebuildsArgument) {
    const PrimeTable& table = PrimeTable::shared();
    for (std::uint64_t n : {1ull, 2ull, 12ull, 360ull, 999983ull * 999979ull, 1ull << 40}) {
        Natural back = 1;
        for (const auto& [q, v] : table.factorize(Natural(n))) {
            EXPECT_TRUE(is_prime(q.convert_to<std::uint64_t>()));
            for (unsigned i = 0; i < v; ++i) back *= q;
        }
        EXPECT_EQ(back, Natural(n));
    }
}

TEST(NumberTheory, FactorizeRefusesUnfactorableCofactor) {
    PrimeTable small(100);
    // 10007 * 10009 has no factor below 100 and exceeds 100^2.
    EXPECT_THROW(small.factorize(Natural(10007) * 10009), BudgetExceeded);
    EXPECT_THROW(small.factorize(Natural(0)), DomainError);
}

}  // namespace
}  // namespace schur_div
