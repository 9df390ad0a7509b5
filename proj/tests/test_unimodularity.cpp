#include <gtest/gtest.h>

#include "sumod/catalog.hpp"
#include "sumod/errors.hpp"
#include "sumod/exactmat.hpp"
#include "sumod/unimodularity.hpp"
#include "support.hpp"

using namespace sumod;

TEST(IsTu, Basics) {
    EXPECT_TRUE(is_tu(IntMatrix(0, 0)).holds);
    EXPECT_TRUE(is_tu(IntMatrix::identity(6)).holds);
    auto c = is_tu(IntMatrix{{1, 1}, {1, -1}});
    EXPECT_FALSE(c.holds);
    ASSERT_TRUE(c.witness);
    EXPECT_EQ(c.witness->determinant, -2);
    EXPECT_FALSE(c.witness->zeroed_entry);
    EXPECT_THROW(is_tu(IntMatrix{{2}}), InvalidArgument);
    EXPECT_THROW(is_tu(IntMatrix::identity(9)), CapExceeded);
    EXPECT_NO_THROW(is_tu(IntMatrix::identity(9), OracleCaps{9, 16}));
}

TEST(IsTu, AgreesWithCofactorOracle) {
    CorpusRng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix m = oracle::random_signed_unit(rng, 1 + rng.below(5), 1 + rng.below(5), 30 + rng.below(40));
        auto c = is_tu(m);
        ASSERT_EQ(c.holds, oracle::brute_tu(m)) << m;
        if (!c.holds) ASSERT_TRUE(witness_replays(m, *c.witness)) << m;
    }
}

TEST(IsSu, AgreesWithCofactorOracle) {
    CorpusRng rng(22);
    int su = 0;
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix m = trial % 2 ? oracle::random_network_matrix(rng, 2 + rng.below(4), 1 + rng.below(4))
                                : oracle::random_signed_unit(rng, 1 + rng.below(4), 1 + rng.below(4), 50);
        auto c = is_su(m);
        ASSERT_EQ(c.holds, oracle::brute_su(m)) << m;
        su += c.holds;
        if (!c.holds) ASSERT_TRUE(witness_replays(m, *c.witness)) << m;
    }
    EXPECT_GT(su, 20);
}

TEST(ParallelKernel, MatchesSerialReference) {
    CorpusRng rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        IntMatrix m = trial % 3 == 0 ? oracle::random_network_matrix(rng, 3 + rng.below(4), 2 + rng.below(4))
                                     : oracle::random_signed_unit(rng, 2 + rng.below(5), 2 + rng.below(5), 45);
        auto a = is_tu(m), b = reference::is_tu(m);
        ASSERT_EQ(a.holds, b.holds) << m;
        ASSERT_EQ(a.witness, b.witness) << m;
        auto c = is_su(m), d = reference::is_su(m);
        ASSERT_EQ(c.holds, d.holds) << m;
        ASSERT_EQ(c.witness, d.witness) << m;
    }
}

TEST(WitnessOrder, SmallerThenBottomRight) {
    Witness small{{0, 1}, {0, 1}, std::nullopt, 2};
    Witness big{{0, 1, 2}, {0, 1, 2}, std::nullopt, 2};
    Witness right{{0, 1}, {0, 2}, std::nullopt, 2};
    EXPECT_TRUE(witness_preferred(small, big));
    EXPECT_FALSE(witness_preferred(big, small));
    EXPECT_TRUE(witness_preferred(right, small));
}

TEST(IsSu, KnownWitnesses) {
    auto b1 = is_su(classic_matrix(Classic::B1));
    ASSERT_FALSE(b1.holds);
    EXPECT_EQ(b1.witness->zeroed_entry, std::make_pair(std::size_t{3}, std::size_t{2}));
    EXPECT_EQ(b1.witness->rows, (IndexSet{2, 3, 4}));
    EXPECT_EQ(b1.witness->cols, (IndexSet{1, 2, 3}));
    EXPECT_EQ(b1.witness->determinant, 2);

    auto n2 = is_su(classic_matrix(Classic::N2));
    ASSERT_FALSE(n2.holds);
    EXPECT_EQ(n2.witness->zeroed_entry, std::make_pair(std::size_t{2}, std::size_t{1}));
    EXPECT_TRUE(is_su(classic_matrix(Classic::N1)).holds);
}

TEST(IsSu, SkipsZeroingsUnderTwoNonzeroRule) {
    IntMatrix m{{1, 0, 1}, {-1, 1, 0}, {0, -1, -1}, {0, 0, 0}};
    auto c = is_su(m);
    EXPECT_TRUE(c.holds);
    EXPECT_TRUE(c.stats.fast_path);
    EXPECT_EQ(c.stats.zeroings, 0u);
    EXPECT_EQ(two_nonzero_su_rule(m), true);
    EXPECT_EQ(two_nonzero_su_rule(IntMatrix{{1, 1}, {1, -1}}), false);
    EXPECT_EQ(two_nonzero_su_rule(classic_matrix(Classic::B1)), std::nullopt);
}

TEST(GhouilaHouri, AgreesWithSubdeterminants) {
    CorpusRng rng(24);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m = oracle::random_signed_unit(rng, 1 + rng.below(5), 1 + rng.below(5), 35);
        ASSERT_EQ(ghouila_houri_tu(m), oracle::brute_tu(m)) << m;
    }
    EXPECT_THROW(ghouila_houri_tu(IntMatrix(17, 1)), CapExceeded);
}

TEST(Witness, ReplayRejectsTampering) {
    IntMatrix b1 = classic_matrix(Classic::B1);
    Witness w = *is_su(b1).witness;
    EXPECT_EQ(replay(b1, w), 2);
    Witness bad = w;
    bad.determinant = -2;
    EXPECT_FALSE(witness_replays(b1, bad));
    bad = w;
    bad.zeroed_entry = std::make_pair(std::size_t{0}, std::size_t{1});
    EXPECT_FALSE(witness_replays(b1, bad));
    bad = w;
    bad.rows = {4, 3, 2};
    EXPECT_FALSE(witness_replays(b1, bad));
}

TEST(Check, RejectsNonSignedUnit) {
    EXPECT_THROW(check(Property::su, IntMatrix{{0, 3}}), InvalidArgument);
}
