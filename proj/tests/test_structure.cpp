#include <gtest/gtest.h>

#include "sumod/catalog.hpp"
#include "sumod/errors.hpp"
#include "sumod/exactmat.hpp"
#include "sumod/matroid.hpp"
#include "sumod/structure.hpp"
#include "sumod/unimodularity.hpp"
#include "support.hpp"

using namespace sumod;

namespace {

// Bordered path pattern with a shortest block path of length 5.
const IntMatrix kLongPath{{1, 0, 1, 1}, {1, 1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, 1}};

}  // namespace

TEST(BipGraph, EdgesAndComponents) {
    BipGraph g = bipartite_graph(IntMatrix{{1, 0}, {0, -1}});
    EXPECT_EQ(g.edges.size(), 2u);
    EXPECT_EQ(g.component_count(), 2u);
    EXPECT_EQ(bipartite_graph(classic_matrix(Classic::B1)).component_count(), 1u);
}

TEST(DenseBlock, Found) {
    auto d = find_dense_block(kLongPath);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->rows, (IndexSet{0, 3}));
    EXPECT_EQ(d->cols, (IndexSet{2, 3}));
    for (std::size_t i = 0; i < d->rows.size(); ++i)
        for (std::size_t j = 0; j < d->cols.size(); ++j)
            EXPECT_EQ(d->row_signs[i] * d->col_signs[j] * kLongPath(d->rows[i], d->cols[j]), 1);

    auto b2 = find_dense_block(classic_matrix(Classic::B2));
    ASSERT_TRUE(b2);
    EXPECT_EQ(rank(submatrix(classic_matrix(Classic::B2), b2->rows, b2->cols)), 1u);
}

TEST(DenseBlock, AbsentInSuRepresentation) {
    EXPECT_FALSE(find_dense_block(classic_matrix(Classic::N1)));
    EXPECT_FALSE(find_dense_block(IntMatrix{{1, 1}, {1, -1}}));
}

TEST(DenseBlockWitness, N2) {
    IntMatrix n2 = classic_matrix(Classic::N2);
    auto d = find_dense_block(n2);
    ASSERT_TRUE(d);
    auto w = witness_from_dense_block(n2, *d);
    EXPECT_EQ(w.witness.zeroed_entry, std::make_pair(std::size_t{2}, std::size_t{1}));
    EXPECT_EQ(std::llabs(w.witness.determinant), 2);
    EXPECT_TRUE(witness_replays(n2, w.witness));
    EXPECT_EQ(w.path.size(), 4u);
}

TEST(DenseBlockWitness, B2AndLongPath) {
    for (const IntMatrix& n : {classic_matrix(Classic::B2), kLongPath}) {
        auto d = find_dense_block(n);
        ASSERT_TRUE(d);
        auto w = witness_from_dense_block(n, *d);
        EXPECT_EQ(std::llabs(w.witness.determinant), 2);
        EXPECT_TRUE(witness_replays(n, w.witness));
        EXPECT_FALSE(is_su(n).holds);
        EXPECT_EQ(w.path.size() % 2, 0u);
    }
    auto w = witness_from_dense_block(kLongPath, *find_dense_block(kLongPath));
    EXPECT_EQ(w.path.size(), 6u);
}

TEST(DenseBlockWitness, RequiresThreeConnectivity) {
    IntMatrix n{{1, 1}, {1, 1}};
    auto d = find_dense_block(n);
    ASSERT_TRUE(d);
    EXPECT_THROW(witness_from_dense_block(n, *d), InvalidArgument);
    DenseBlock bad = *d;
    bad.rows = {0};
    EXPECT_THROW(witness_from_dense_block(n, bad, false), InvalidArgument);
}

TEST(RowPartition, Identity) {
    auto p = find_row_partition(IntMatrix::identity(4));
    ASSERT_TRUE(p);
    EXPECT_EQ(*p, (RowPartition{{0, 1, 2, 3}}));
}

TEST(RowPartition, SuMatricesAlwaysHaveOne) {
    for (const auto& e : gen_corpus(61, CorpusProfile::su_small, 30)) {
        auto p = find_row_partition(e.matrix);
        ASSERT_TRUE(p) << e.recipe;
        EXPECT_TRUE(verify_row_partition(e.matrix, *p).verified);
    }
    auto n1 = find_row_partition(classic_matrix(Classic::N1));
    ASSERT_TRUE(n1);
    EXPECT_TRUE(verify_row_partition(classic_matrix(Classic::N1), *n1).verified);
}

TEST(RowPartition, MinimalPartsThenLexicographic) {
    // Column 0 has three nonzeros, so one part cannot hold all rows.
    IntMatrix a{{1, 0}, {1, 1}, {1, 1}};
    auto p = find_row_partition(a);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->size(), 2u);
    EXPECT_TRUE(verify_row_partition(a, *p).verified);
    // Brute force over all ordered 2-partitions: none has a smaller label vector.
    std::vector<std::size_t> labels(3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t k = 0; k < p->size(); ++k)
            for (auto x : (*p)[k])
                if (x == r) labels[r] = k;
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<std::size_t> l = {mask & 1u, (mask >> 1) & 1u, (mask >> 2) & 1u};
        RowPartition q(2);
        for (std::size_t r = 0; r < 3; ++r) q[l[r]].push_back(r);
        if (q[0].empty() || q[1].empty()) continue;
        if (verify_row_partition(a, q).verified) EXPECT_LE(labels, l);
    }
    EXPECT_THROW(find_row_partition(IntMatrix(11, 2)), CapExceeded);
}

TEST(RowPartition, ReportsFirstViolation) {
    IntMatrix a{{1, 0}, {0, 1}, {1, 0}};
    auto r = verify_row_partition(a, {{0}, {1}, {2}});
    EXPECT_FALSE(r.verified);
    ASSERT_TRUE(r.violation);
    EXPECT_EQ(*r.violation, (PartitionViolation{0, 0, 2}));
    auto r1 = verify_row_partition(IntMatrix{{1}, {1}, {1}}, {{0, 1, 2}});
    EXPECT_EQ(*r1.violation, (PartitionViolation{0, 0, 1}));
    EXPECT_THROW(verify_row_partition(a, {{0, 1}}), InvalidArgument);
    EXPECT_THROW(verify_row_partition(a, {{0, 1}, {1, 2}}), InvalidArgument);
    EXPECT_THROW(verify_row_partition(a, {{0, 1, 2}, {}}), InvalidArgument);
}

TEST(FinalStructure, StaircaseCycle) {
    IntMatrix a{{1, 0, 0, -1}, {1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, 1, 1}};
    auto rep = verify_final_structure(a, {{0, 1, 2, 3}}, {{0, 1, 2, 3}});
    EXPECT_TRUE(rep.clause_iii);
    ASSERT_EQ(rep.blocks.size(), 1u);
    EXPECT_EQ(rep.blocks[0].shape, BlockShape::cycle);
    EXPECT_TRUE(rep.holds());
}

TEST(FinalStructure, TwoDisjointCycles) {
    IntMatrix a{{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}};
    auto rep = verify_final_structure(a, {{0, 1, 2, 3}}, {{0, 1, 2, 3}});
    EXPECT_FALSE(rep.clause_iii);
    EXPECT_EQ(rep.blocks[0].shape, BlockShape::not_cycle);
    EXPECT_FALSE(rep.holds());
}

TEST(FinalStructure, MixedBlocksAreUnchecked) {
    IntMatrix a{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 0}};
    auto rep = verify_final_structure(a, {{0, 1, 2, 3}}, {{0, 1, 2}});
    EXPECT_EQ(rep.blocks[0].shape, BlockShape::unchecked);
    EXPECT_TRUE(rep.clause_iii);
    EXPECT_THROW(verify_final_structure(a, {{0, 1, 2}}, {{0, 1, 2}}), InvalidArgument);
}

TEST(FinalStructure, WheelFamily) {
    for (std::size_t k = 3; k <= 6; ++k) {
        IntMatrix n = network_matrix(wheel_graph(k), wheel_star_tree(k));
        ASSERT_TRUE(is_su(n).holds);
        ASSERT_TRUE(is_k_connected(ReprMatroid(n), 3).connected);
        auto s = find_row_partition(n);
        auto t = find_row_partition(n.transposed());
        ASSERT_TRUE(s && t);
        auto rep = verify_final_structure(n, *s, *t);
        EXPECT_TRUE(rep.holds()) << "W" << k;
        EXPECT_EQ(arrange(n, *s, *t).nonzeros(), n.nonzeros());
    }
}

TEST(Dot, StylesBlockAndPath) {
    auto d = find_dense_block(kLongPath);
    auto w = witness_from_dense_block(kLongPath, *d);
    std::string dot = export_dot(kLongPath, d, w.path);
    EXPECT_NE(dot.find("graph BG {"), std::string::npos);
    EXPECT_NE(dot.find("r0 -- c2 [label=\"1\", style=bold]"), std::string::npos);
    EXPECT_NE(dot.find("color=red"), std::string::npos);
    EXPECT_EQ(export_dot(IntMatrix{{1}}), "graph BG {\n  r0 [shape=circle];\n  c0 [shape=box];\n  r0 -- c0 [label=\"1\"];\n}\n");
}
