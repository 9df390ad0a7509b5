#include <gtest/gtest.h>

#include <algorithm>

#include "sumod/catalog.hpp"
#include "sumod/errors.hpp"
#include "sumod/exactmat.hpp"
#include "sumod/ksum.hpp"
#include "sumod/matroid.hpp"
#include "support.hpp"

using namespace sumod;

namespace {

// Columns of [I | N] for the chosen elements.
IntMatrix element_columns(const IntMatrix& n, const ElementSet& x) {
    IntMatrix out(n.rows(), x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        for (std::size_t i = 0; i < n.rows(); ++i)
            out(i, k) = x[k] < n.rows() ? (i == x[k] ? 1 : 0) : n(i, x[k] - n.rows());
    return out;
}

// Brute-force circuits over GF(2): dependent sets all of whose one-smaller subsets are independent.
std::vector<ElementSet> brute_circuits(const IntMatrix& n) {
    const std::size_t g = n.rows() + n.cols();
    std::vector<ElementSet> out;
    for (std::size_t k = 1; k <= n.rows() + 1; ++k) {
        for (const auto& x : oracle::subsets(g, k)) {
            if (oracle::row_reduction_gf2_rank(element_columns(n, x)) == k) continue;
            bool minimal = true;
            for (std::size_t drop = 0; drop < k && minimal; ++drop) {
                ElementSet y = x;
                y.erase(y.begin() + static_cast<long>(drop));
                minimal = oracle::row_reduction_gf2_rank(element_columns(n, y)) == k - 1;
            }
            if (minimal) out.push_back(x);
        }
    }
    return out;
}

}  // namespace

TEST(ReprMatroid, RankAgreesWithRowReduction) {
    CorpusRng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix n = oracle::random_signed_unit(rng, 1 + rng.below(5), 1 + rng.below(5), 40);
        ReprMatroid m(n);
        ElementSet x;
        for (std::size_t e = 0; e < m.ground_size(); ++e)
            if (rng.coin()) x.push_back(e);
        ASSERT_EQ(m.rank_of(x), oracle::row_reduction_gf2_rank(element_columns(n, x)));
    }
}

TEST(ReprMatroid, Labels) {
    ReprMatroid m(classic_matrix(Classic::N1));
    EXPECT_EQ(m.label(0), "r0");
    EXPECT_EQ(m.label(4), "c1");
    EXPECT_EQ(m.element("c2"), 5u);
    EXPECT_THROW(m.element("x1"), ParseError);
    EXPECT_THROW(m.element("r9"), IndexError);
    EXPECT_THROW(m.lambda({}), InvalidArgument);
}

TEST(ReprMatroid, LambdaMatchesCrossRanks) {
    CorpusRng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix n = oracle::random_signed_unit(rng, 2 + rng.below(4), 2 + rng.below(4), 40);
        ReprMatroid m(n);
        ElementSet x;
        for (std::size_t e = 0; e < m.ground_size(); ++e)
            if (rng.coin()) x.push_back(e);
        if (x.empty() || x.size() == m.ground_size()) continue;
        Separation s = separation_of(m, x);
        ASSERT_EQ(m.lambda(x), s.cross_rank_top_right + s.cross_rank_bottom_left);
    }
}

TEST(Separations, KernelMatchesReference) {
    CorpusRng rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix n = oracle::random_signed_unit(rng, 1 + rng.below(5), 1 + rng.below(5), 55);
        for (int order : {1, 2}) ASSERT_EQ(separations_of_order(n, order), reference::separations_of_order(n, order)) << n;
    }
}

TEST(Separations, OneSumHasOrderOne) {
    IntMatrix n = one_sum(classic_matrix(Classic::N1), classic_matrix(Classic::N1));
    auto seps = separations_of_order(n, 1);
    ASSERT_FALSE(seps.empty());
    for (const auto& s : seps) {
        EXPECT_EQ(s.cross_rank_top_right + s.cross_rank_bottom_left, 0u);
        EXPECT_GE(s.right_size(), 1u);
    }
    EXPECT_FALSE(is_k_connected(ReprMatroid(n), 2).connected);
    EXPECT_THROW(separations_of_order(IntMatrix(10, 10), 1), CapExceeded);
}

TEST(Connectivity, NamedMatrices) {
    for (auto p : {Classic::B1, Classic::B2, Classic::N1, Classic::N2}) {
        auto r = is_k_connected(ReprMatroid(classic_matrix(p)), 3);
        EXPECT_TRUE(r.connected);
        EXPECT_FALSE(r.separation);
    }
    // A parallel pair (repeated column) is a 2-separation.
    auto r = is_k_connected(ReprMatroid(extend(classic_matrix(Classic::N1), ExtendKind::repeat_col, 0)), 3);
    EXPECT_FALSE(r.connected);
    ASSERT_TRUE(r.separation);
    EXPECT_EQ(r.separation->order, 2);
}

TEST(Circuits, AgreeWithBruteForce) {
    CorpusRng rng(34);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix n = oracle::random_signed_unit(rng, 1 + rng.below(4), 1 + rng.below(4), 40);
        ASSERT_EQ(circuits(ReprMatroid(n)), brute_circuits(n)) << n;
    }
    EXPECT_EQ(circuits(ReprMatroid(classic_matrix(Classic::B1))), brute_circuits(classic_matrix(Classic::B1)));
}

TEST(IsR10, RecognizesOnlyR10) {
    EXPECT_TRUE(is_r10(classic_matrix(Classic::B1)));
    EXPECT_TRUE(is_r10(classic_matrix(Classic::B2)));
    EXPECT_FALSE(is_r10(classic_matrix(Classic::N1)));
    EXPECT_FALSE(is_r10(IntMatrix::identity(5)));
    IntMatrix b1 = classic_matrix(Classic::B1);
    IntMatrix tweak = b1;
    tweak(0, 1) = 1;
    EXPECT_FALSE(is_r10(tweak));
    PermuteScale ps{{2, 0, 4, 1, 3}, {1, 3, 0, 2, 4}, {1, -1, 1, 1, -1}, {1, 1, -1, 1, 1}};
    EXPECT_TRUE(is_r10(permute_scale(b1, ps)));
}
