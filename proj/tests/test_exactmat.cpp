#include <gtest/gtest.h>

#include <sstream>

#include "sumod/catalog.hpp"
#include "sumod/errors.hpp"
#include "sumod/exactmat.hpp"
#include "support.hpp"

using namespace sumod;

TEST(IntMatrix, ConstructionAndAccess) {
    IntMatrix m{{1, 0, -1}, {0, 1, 1}};
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 3u);
    EXPECT_EQ(m(0, 2), -1);
    EXPECT_EQ(m.nonzeros(), 4u);
    EXPECT_EQ(m.col_nonzeros(2), 2u);
    EXPECT_TRUE(m.signed_unit());
    EXPECT_THROW(m.at(2, 0), IndexError);
    EXPECT_THROW(IntMatrix(2, 2, std::vector<Entry>{1, 2, 3}), DimensionError);
    EXPECT_FALSE(IntMatrix({{2}}).signed_unit());
}

TEST(IntMatrix, TextRoundTrip) {
    IntMatrix m{{1, -1, 0}, {0, 0, 1}};
    std::string text = format_matrix(m);
    EXPECT_EQ(text, "2 3\n1 -1 0\n0 0 1\n");
    EXPECT_EQ(parse_matrix(text), m);
    EXPECT_EQ(parse_matrix("# comment\n2 1\n1 # trailing\n-1\n"), (IntMatrix{{1}, {-1}}));
    EXPECT_THROW(parse_matrix("2 2\n1 0 1"), ParseError);
    EXPECT_THROW(parse_matrix("2 2\n1 0 1 x"), ParseError);
    EXPECT_THROW(parse_matrix("1 1\n1 1"), ParseError);
    EXPECT_EQ(parse_matrix("0 3\n").cols(), 3u);
}

TEST(Det, SmallCases) {
    EXPECT_EQ(det(IntMatrix(0, 0)), 1);
    EXPECT_EQ(det(IntMatrix{{-1}}), -1);
    EXPECT_EQ(det(IntMatrix{{1, 1}, {1, -1}}), -2);
    EXPECT_EQ(det(IntMatrix::identity(7)), 1);
    EXPECT_EQ(det(classic_matrix(Classic::N2)), 1);
    EXPECT_THROW(det(IntMatrix(2, 3)), DimensionError);
    EXPECT_THROW(det(IntMatrix::identity(kMaxDeterminantOrder + 1)), CapExceeded);
}

TEST(Det, AgreesWithCofactorExpansion) {
    CorpusRng rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = 1 + rng.below(7);
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Entry>(rng.below(7)) - 3;
        ASSERT_EQ(det(m), oracle::cofactor_det(m)) << m;
    }
}

TEST(Rank, AgreesWithMinorAndRowReductionOracles) {
    CorpusRng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix m = oracle::random_signed_unit(rng, 1 + rng.below(5), 1 + rng.below(5), 50);
        ASSERT_EQ(rank(m), oracle::minor_rank(m)) << m;
        ASSERT_EQ(gf2_rank(m), oracle::row_reduction_gf2_rank(m)) << m;
    }
    EXPECT_EQ(rank(IntMatrix{{1, 1}, {1, -1}}), 2u);
    EXPECT_EQ(gf2_rank(IntMatrix{{1, 1}, {1, -1}}), 1u);
}

TEST(Submatrix, OrderAndValidation) {
    IntMatrix m{{1, 2, 3}, {4, 5, 6}};
    EXPECT_EQ(submatrix(m, {1, 0}, {2}), (IntMatrix{{6}, {3}}));
    EXPECT_THROW(submatrix(m, {2}, {0}), IndexError);
    EXPECT_THROW(submatrix(m, {0, 0}, {0}), IndexError);
    EXPECT_EQ(zeroed(m, 1, 1)(1, 1), 0);
}

TEST(PermuteScale, AppliesAndInverts) {
    IntMatrix m = classic_matrix(Classic::B1);
    PermuteScale ps{{4, 2, 0, 1, 3}, {1, 0, 3, 4, 2}, {1, -1, 1, -1, 1}, {-1, 1, 1, 1, -1}};
    IntMatrix p = permute_scale(m, ps);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            EXPECT_EQ(p(i, j), ps.row_signs[i] * ps.col_signs[j] * m(ps.row_perm[i], ps.col_perm[j]));
    auto found = find_permute_scale(m, p);
    ASSERT_TRUE(found);
    EXPECT_EQ(permute_scale(m, *found), p);
    EXPECT_THROW(permute_scale(m, {0, 0, 1, 2, 3}, ps.col_perm, ps.row_signs, ps.col_signs), IndexError);
    EXPECT_FALSE(permute_scale_equivalent(classic_matrix(Classic::N1), classic_matrix(Classic::N2)));
}

TEST(Pivot, InvolutionUpToSigns) {
    IntMatrix m = classic_matrix(Classic::B1);
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 5; ++c) {
            if (m(r, c) == 0) {
                EXPECT_THROW(pivot(m, r, c), InvalidArgument);
                continue;
            }
            IntMatrix back = pivot(pivot(m, r, c), r, c);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 5; ++j) {
                    Entry s = (i == r ? -1 : 1) * (j == c ? -1 : 1);
                    EXPECT_EQ(back(i, j), s * m(i, j));
                }
        }
    }
}

TEST(Pivot, PreservesBinaryMatroidRanks) {
    // [I | N] and [I | pivot(N)] represent the same matroid: compare ranks of
    // all element subsets of size <= 3 after swapping the pivot's elements.
    IntMatrix n = classic_matrix(Classic::N1);
    IntMatrix p = pivot(n, 0, 0);
    auto full = [](const IntMatrix& x) {
        IntMatrix f(x.rows(), x.rows() + x.cols());
        for (std::size_t i = 0; i < x.rows(); ++i) {
            f(i, i) = 1;
            for (std::size_t j = 0; j < x.cols(); ++j) f(i, x.rows() + j) = x(i, j);
        }
        return f;
    };
    IntMatrix a = full(n), b = full(p);
    IndexSet swap = {3, 1, 2, 0, 4, 5};
    for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& cols : oracle::subsets(6, k)) {
            IndexSet mapped;
            for (auto c : cols) mapped.push_back(swap[c]);
            EXPECT_EQ(gf2_rank(submatrix(a, {0, 1, 2}, cols)), gf2_rank(submatrix(b, {0, 1, 2}, mapped)));
        }
    }
}

TEST(Extend, Shapes) {
    IntMatrix m{{1, -1}, {0, 1}};
    EXPECT_EQ(extend(m, ExtendKind::transpose), m.transposed());
    EXPECT_EQ(extend(m, ExtendKind::zero_row), (IntMatrix{{1, -1}, {0, 1}, {0, 0}}));
    EXPECT_EQ(extend(m, ExtendKind::unit_col, 1), (IntMatrix{{1, -1, 0}, {0, 1, 1}}));
    EXPECT_EQ(extend(m, ExtendKind::repeat_row, 0), (IntMatrix{{1, -1}, {0, 1}, {1, -1}}));
    EXPECT_EQ(extend(m, ExtendKind::repeat_col, 1), (IntMatrix{{1, -1, -1}, {0, 1, 1}}));
    EXPECT_THROW(extend(m, ExtendKind::unit_row, 2), IndexError);
    for (auto k : all_extend_kinds()) EXPECT_EQ(extend_kind_from_string(to_string(k)), k);
    EXPECT_FALSE(extend_kind_from_string("nope"));
}
