#include "schur_div/coloring.hpp"
#include "schur_div/coloring_spec.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>

namespace schur_div {
namespace {

std::set<std::uint64_t> color_class(const Coloring& c, std::uint64_t hi, Color color) {
    std::set<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= hi; ++n) {
        if (c.color_of(n) == color) out.insert(n);
    }
    return out;
}

TEST(Coloring, ParityUsesResidueClass) {
    const Coloring c = Coloring::parity();
    EXPECT_EQ(c.num_colors(), 2u);
    EXPECT_EQ(c.color_of(7), 1u);
    EXPECT_EQ(c.color_of(8), 0u);
    EXPECT_FALSE(c.domain_max());
}

TEST(Coloring, CosetQuadraticResiduesModEleven) {
    const Coloring c = coset_coloring(11, 2);
    EXPECT_EQ(c.num_colors(), 3u);
    EXPECT_EQ(c.color_of(3), c.color_of(5));
    EXPECT_EQ(color_class(c, 10, 0), (std::set<std::uint64_t>{1, 3, 4, 5, 9}));
    EXPECT_EQ(c.color_of(22), 2u);  // reserved color for multiples of p
    EXPECT_EQ(c.color_of(11), 2u);
}

TEST(Coloring, CosetClassesModSeven) {
    const Coloring c = coset_coloring(7, 2);
    EXPECT_EQ(color_class(c, 6, 0), (std::set<std::uint64_t>{1, 2, 4}));
    EXPECT_EQ(color_class(c, 6, 1), (std::set<std::uint64_t>{3, 5, 6}));
}

TEST(Coloring, CosetCubesModThirtyOne) {
    const Coloring c = coset_coloring(31, 3);
    EXPECT_EQ(c.num_colors(), 4u);
    const auto cubes = oracle::kth_powers(31, 3);
    EXPECT_EQ(cubes, (std::set<std::uint64_t>{1, 2, 4, 8, 15, 16, 23, 27, 29, 30}));
    EXPECT_EQ(color_class(c, 30, c.color_of(1)), cubes);
}

TEST(Coloring, FirstPowersFormOneClass) {
    const Coloring c = coset_coloring(7, 1);
    EXPECT_EQ(color_class(c, 6, 0).size(), 6u);
    EXPECT_EQ(c.color_of(14), 1u);
}

TEST(Coloring, CosetColorsFollowSmallestRepresentative) {
    for (std::uint64_t p : {13ull, 31ull, 37ull, 43ull, 61ull, 73ull}) {
        const Coloring c = coset_coloring(p, 6);
        Color next = 0;
        for (std::uint64_t n = 1; n < p; ++n) {
            const Color col = c.color_of(n);
            ASSERT_LE(col, next) << "p=" << p << " n=" << n;
            if (col == next) ++next;
        }
    }
}

// u and v share a coset color iff u * v^{-1} is a k-th power.
TEST(Coloring, CosetMembershipMatchesBruteForce) {
    for (std::uint64_t p : primes_up_to(997)) {
        if (p < 3) continue;
        for (std::uint64_t k : {2ull, 3ull, 4ull, 6ull}) {
            const Coloring c = coset_coloring(p, k);
            const auto powers = oracle::kth_powers(p, k);
            const std::uint64_t step = p < 200 ? 1 : p / 50;
            for (std::uint64_t v = 1; v < p; v += step) {
                const std::uint64_t v_inv = powmod(v, p - 2, p);
                for (std::uint64_t u = 1; u < p; ++u) {
                    const bool same = c.color_of(u) == c.color_of(v);
                    ASSERT_EQ(same, powers.count(u * v_inv % p) > 0) << "p=" << p << " k=" << k;
                }
            }
        }
    }
}

TEST(Coloring, ModularRulesAcceptArbitraryPrecision) {
    const Coloring c = coset_coloring(1000003, 3);
    Natural big = Natural(1);
    for (int i = 0; i < 40; ++i) big *= 1234567;
    big += 17;
    EXPECT_EQ(c.color_of(big), c.color_of_residue(mod_u64(big, 1000003)));
    EXPECT_EQ(Coloring::parity().color_of(big), static_cast<Color>(mod_u64(big, 2)));
}

TEST(Coloring, ExplicitDomainIsBounded) {
    const Coloring c = Coloring::explicit_table({0, 1, 1, 0});
    EXPECT_EQ(c.num_colors(), 2u);
    EXPECT_EQ(c.domain_max(), 4u);
    EXPECT_EQ(c.color_of(4), 0u);
    EXPECT_THROW(c.color_of(5), DomainError);
    EXPECT_THROW(c.color_of(0), DomainError);
    EXPECT_THROW(c.color_of_residue(1), EvaluationInfeasible);
}

TEST(Coloring, UnityExponentsAdd) {
    EXPECT_EQ(unity_coloring(UnityFunction::trivial(3)).color_of(360), 0u);
    EXPECT_EQ(unity_coloring(UnityFunction::liouville_type(2)).color_of(12), 1u);
    EXPECT_EQ(unity_coloring(UnityFunction(2, {{2, 1}}, 0)).color_of(12), 0u);

    const Coloring c = unity_coloring(UnityFunction(5, {{2, 3}, {3, 1}, {7, 4}}, 2));
    for (std::uint64_t a = 1; a <= 120; ++a) {
        for (std::uint64_t b = 1; b <= 120; ++b) {
            ASSERT_EQ(c.color_of(a * b), (c.color_of(a) + c.color_of(b)) % 5);
        }
    }
}

TEST(Coloring, RejectsBadConstruction) {
    EXPECT_THROW(coset_coloring(15, 2), DomainError);
    EXPECT_THROW(coset_coloring(7, 0), DomainError);
    EXPECT_THROW(Coloring::residue(3, {0, 1}), DomainError);
    EXPECT_THROW(Coloring::explicit_table({}), DomainError);
    EXPECT_THROW(Coloring::explicit_table({0, 3}, 2), DomainError);
}

TEST(ColoringSpec, ParsesEveryForm) {
    EXPECT_EQ(parse_coloring_spec("parity").describe(), "mod:2:0,1");
    EXPECT_EQ(parse_coloring_spec("mod:3:0,1,2").num_colors(), 3u);
    EXPECT_EQ(parse_coloring_spec("coset:7:2").describe(), "coset:7:2");
    const Coloring u = parse_coloring_spec("unity:3:2=1,5=2:default=1");
    EXPECT_EQ(u.describe(), "unity:3:2=1,5=2:default=1");
    EXPECT_EQ(u.color_of(10), 0u);
    EXPECT_EQ(u.color_of(7), 1u);
    EXPECT_EQ(parse_coloring_spec("unity:2:").describe(), "unity:2::default=0");
    EXPECT_EQ(parse_coloring_spec("unity:2::default=1").color_of(6), 0u);
}

TEST(ColoringSpec, LoadsExplicitFile) {
    const std::string path = ::testing::TempDir() + "explicit_coloring.json";
    std::ofstream(path) << "[0,1,1,0]";
    const Coloring c = parse_coloring_spec("explicit:" + path);
    EXPECT_EQ(c.domain_max(), 4u);
    EXPECT_EQ(c.color_of(2), 1u);
    EXPECT_THROW(parse_coloring_spec("explicit:/nonexistent/file.json"), Error);
}

TEST(ColoringSpec, ErrorsCitePosition) {
    auto position_of = [](const std::string& text) -> std::size_t {
        try {
            parse_coloring_spec(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return SIZE_MAX;
    };
    EXPECT_EQ(position_of("rainbow"), 0u);
    EXPECT_EQ(position_of("mod:x"), 4u);
    EXPECT_EQ(position_of("mod:3:0,1"), 4u);
    EXPECT_EQ(position_of("coset:8:2"), 6u);
    EXPECT_EQ(position_of("coset:7"), 7u);
    EXPECT_EQ(position_of("parity "), 6u);
    EXPECT_EQ(position_of("unity:2:4=1"), 8u);
    EXPECT_EQ(position_of("unity:2:3=2"), 10u);
    EXPECT_EQ(position_of("unity:2:3=1:dflt=1"), 12u);
    EXPECT_EQ(position_of("explicit:"), 9u);
}

}  // namespace
}  // namespace schur_div
