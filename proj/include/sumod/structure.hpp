#ifndef SUMOD_STRUCTURE_HPP
#define SUMOD_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sumod/int_matrix.hpp"
#include "sumod/unimodularity.hpp"

namespace sumod {

/// Vertex of the bipartite graph of a matrix: a row or a column.
struct BipVertex {
    enum class Side { row, col };
    Side side = Side::row;
    std::size_t index = 0;

    std::string label() const { return (side == Side::row ? "r" : "c") + std::to_string(index); }
    friend bool operator==(const BipVertex&, const BipVertex&) = default;
};

/// Bipartite graph with an edge (r_i, c_j) for every nonzero N(i, j).
struct BipGraph {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  ///< (row, col), row-major order

    std::size_t component_count() const;
};

BipGraph bipartite_graph(const IntMatrix& n);

/*
 * A submatrix without zeros that scales to all-ones:
 * row_signs[i] * col_signs[j] * N(rows[i], cols[j]) == 1.
 */
struct DenseBlock {
    IndexSet rows;
    IndexSet cols;
    std::vector<int> row_signs;
    std::vector<int> col_signs;
};

/*
 * Seeds with the lexicographically first (r1, r2, c1, c2) whose 2x2 submatrix
 * has four nonzeros and determinant 0, then greedily adds rows and columns
 * (rows first, ascending index, repeated until nothing changes) while the
 * block stays zero-free and rank 1. nullopt when no seed exists.
 */
std::optional<DenseBlock> find_dense_block(const IntMatrix& n);

struct DenseBlockWitness {
    Witness witness;
    /// Shortest path r2 - q1 - p_n - ... - q_n - p_1 - s2 in BG(N) minus the block edges.
    std::vector<BipVertex> path;
    /// Bordered path submatrix in proof order: rows r2, p_n..p_1, r1; cols q1..q_n, s2, s1.
    IndexSet path_rows;
    IndexSet path_cols;
};

/*
 * Builds a non-SU witness from a dense block of a representation of a
 * 3-connected regular matroid: shortest path from a block row to a block
 * column avoiding the block edges, the bordered path submatrix around it, and
 * the first-row zeroing (ascending column) whose determinant is +-2.
 *
 * Throws InvalidArgument when N is not 3-connected (skipped if
 * `check_connectivity` is false) or no such path exists.
 */
DenseBlockWitness witness_from_dense_block(const IntMatrix& n, const DenseBlock& block,
                                           bool check_connectivity = true);

/// Ordered partition (S_1, ..., S_k) of row indices.
using RowPartition = std::vector<IndexSet>;

/// Rows cap for the exhaustive partition search.
inline constexpr std::size_t kPartitionCap = 10;

/*
 * Ordered row partition where (i) every column has at most two nonzeros in
 * each part and (ii) a column with exactly one nonzero in S_i is zero in
 * S_{i+1}, ..., S_k. Minimizes k, then the row-to-part label vector
 * lexicographically. nullopt if none exists (then the matrix is not SU).
 */
std::optional<RowPartition> find_row_partition(const IntMatrix& a, std::size_t cap = kPartitionCap);

struct PartitionViolation {
    std::size_t column = 0;
    std::size_t part = 0;  ///< 0-based index into the partition
    int clause = 1;        ///< 1: more than two nonzeros; 2: single nonzero followed by nonzeros

    friend bool operator==(const PartitionViolation&, const PartitionViolation&) = default;
};

struct PartitionReport {
    bool verified = true;
    std::optional<PartitionViolation> violation;  ///< first by (column, part)
};

/// Throws InvalidArgument when `p` does not cover every row exactly once.
PartitionReport verify_row_partition(const IntMatrix& a, const RowPartition& p);

enum class BlockShape { cycle, not_cycle, unchecked };

const char* to_string(BlockShape s);

struct BlockReport {
    std::size_t row_part = 0;
    std::size_t col_part = 0;
    BlockShape shape = BlockShape::unchecked;
};

struct FinalStructureReport {
    bool row_partition_valid = true;  ///< S satisfies (i), (ii) on A
    bool col_partition_valid = true;  ///< T satisfies (i), (ii) on A^T
    bool clause_i = true;             ///< A_{1,1}: 0 or 2 nonzeros per row and column
    bool clause_ii = true;            ///< columns of A_{1,j} and rows of A_{i,1}: 0 or 2 nonzeros
    bool clause_iii = true;           ///< blocks with two nonzeros per row and column form one cycle
    std::vector<BlockReport> blocks;

    bool holds() const {
        return row_partition_valid && col_partition_valid && clause_i && clause_ii && clause_iii;
    }
};

/*
 * Checks the block form of A arranged by a row partition S and a column
 * partition T. Blocks whose rows and columns do not all carry exactly two
 * nonzeros are reported `unchecked`, never as passes of clause (iii).
 */
FinalStructureReport verify_final_structure(const IntMatrix& a, const RowPartition& s, const RowPartition& t);

/// Rows and columns reordered as S_1..S_k and T_1..T_l.
IntMatrix arrange(const IntMatrix& a, const RowPartition& s, const RowPartition& t);

/// Graphviz text of BG(N); block edges drawn bold, path edges in red.
std::string export_dot(const IntMatrix& n, const std::optional<DenseBlock>& block = std::nullopt,
                       const std::vector<BipVertex>& path = {});

}  // namespace sumod

#endif
