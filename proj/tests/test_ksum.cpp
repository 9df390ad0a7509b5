#include <gtest/gtest.h>

#include "sumod/catalog.hpp"
#include "sumod/errors.hpp"
#include "sumod/exactmat.hpp"
#include "sumod/ksum.hpp"
#include "sumod/unimodularity.hpp"
#include "support.hpp"

using namespace sumod;

TEST(OneSum, BlockDiagonal) {
    IntMatrix a{{1, -1}}, b{{1}, {1}};
    EXPECT_EQ(one_sum(a, b), (IntMatrix{{1, -1, 0}, {0, 0, 1}, {0, 0, 1}}));
    EXPECT_EQ(one_sum(IntMatrix(0, 0), b), b);
}

TEST(TwoSum, OuterProductGlue) {
    IntMatrix left{{1, 1}, {0, -1}};
    IntMatrix right{{1, -1}, {1, 1}};
    EXPECT_EQ(two_sum(left, right), (IntMatrix{{1, 1, -1}, {0, -1, 1}, {0, 1, 1}}));
    EXPECT_THROW(two_sum(IntMatrix{{1, 0}}, right), InvalidArgument);
    EXPECT_THROW(two_sum(IntMatrix(1, 0), right), DimensionError);
}

TEST(ThreeSum, Delta) {
    IntMatrix left{{1, 1, 1}, {1, 0, 1}};
    IntMatrix right{{1, 0, 1}, {1, 1, 1}};
    EXPECT_EQ(three_sum(left, right, ThreeSumVariant::delta), (IntMatrix{{1, 1}, {1, 1}}));
    IntMatrix bad{{1, 1, 0}, {1, 0, 1}};
    EXPECT_THROW(three_sum(bad, right, ThreeSumVariant::delta), DimensionError);
}

TEST(ThreeSum, Alt) {
    IntMatrix left{{1, 0, 0}, {1, 0, 1}, {0, 1, 1}};
    IntMatrix right{{1, 1, 0}, {1, 0, 1}, {0, 1, 0}, {1, 1, 1}};
    EXPECT_EQ(three_sum(left, right, ThreeSumVariant::alt),
              (IntMatrix{{1, 0, 0}, {1, 0, 1}, {0, 1, 0}, {1, 1, 1}}));
    IntMatrix singular{{1, 0, 0}, {1, 1, 1}, {1, 1, 1}};
    IntMatrix right2{{1, 1, 0}, {1, 1, 1}, {1, 1, 0}};
    EXPECT_THROW(three_sum(singular, right2, ThreeSumVariant::alt), InvalidArgument);
    IntMatrix mismatch{{1, 1, 0}, {0, 1, 1}, {1, 1, 0}};
    EXPECT_THROW(three_sum(left, mismatch, ThreeSumVariant::alt), DimensionError);
}

TEST(Split, RecomposesToPermutedInput) {
    IntMatrix n = two_sum(extend(classic_matrix(Classic::N1), ExtendKind::unit_col, 0),
                          extend(classic_matrix(Classic::N1), ExtendKind::unit_row, 2).transposed());
    auto seps = find_separations(n, 2);
    ASSERT_FALSE(seps.empty());
    for (const auto& s : seps) {
        Split sp = split_detailed(n, s);
        IndexSet rows = sp.top_rows, cols = sp.top_cols;
        rows.insert(rows.end(), sp.bottom_rows.begin(), sp.bottom_rows.end());
        cols.insert(cols.end(), sp.bottom_cols.begin(), sp.bottom_cols.end());
        ASSERT_EQ(two_sum(sp.left, sp.right), submatrix(n, rows, cols));
    }
}

TEST(Decompose, RoundTripAndLeaves) {
    CorpusRng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix a = oracle::random_network_matrix(rng, 3 + rng.below(3), 2 + rng.below(3));
        IntMatrix b = oracle::random_network_matrix(rng, 3 + rng.below(3), 2 + rng.below(3));
        IntMatrix n = rng.coin() ? one_sum(a, b) : one_sum(b, a);
        Decomposition d = decompose(n);
        ASSERT_TRUE(d.complete);
        ASSERT_EQ(recompose(d.tree), submatrix(n, d.row_order, d.col_order));
        for (const auto& leaf : d.tree.leaves()) {
            if (leaf.rows() + leaf.cols() < 4) continue;
            EXPECT_TRUE(is_k_connected(ReprMatroid(leaf), 3).connected) << leaf;
        }
    }
}

TEST(Decompose, OneSumGivesTwoLeaves) {
    IntMatrix n = one_sum(classic_matrix(Classic::N1), classic_matrix(Classic::B1));
    Decomposition d = decompose(n);
    EXPECT_EQ(d.tree.kind, SumNode::Kind::sum1);
    EXPECT_EQ(d.tree.leaf_count(), 2u);
    EXPECT_TRUE(d.complete);
}

TEST(Decompose, MarksCapExceeded) {
    IntMatrix n = one_sum(classic_matrix(Classic::B1), classic_matrix(Classic::B1));
    Decomposition d = decompose(n, 12);
    EXPECT_FALSE(d.complete);
    EXPECT_TRUE(d.tree.incomplete);
}

TEST(Recompose, RejectsBadGlue) {
    IntMatrix n = two_sum(IntMatrix{{1, 1}, {1, 0}, {0, 1}}, IntMatrix{{1, 1}, {1, 0}, {0, 1}});
    Decomposition d = decompose(n);
    ASSERT_EQ(d.tree.kind, SumNode::Kind::sum2);
    SumNode t = d.tree;
    t.glue_a.assign(t.glue_a.size(), 0);
    EXPECT_THROW(recompose(t), InvalidArgument);
}
