#ifndef SUMOD_KSUM_HPP
#define SUMOD_KSUM_HPP

#include <utility>
#include <vector>

#include "sumod/int_matrix.hpp"
#include "sumod/matroid.hpp"

namespace sumod {

/// [[A, 0], [0, B]].
IntMatrix one_sum(const IntMatrix& a, const IntMatrix& b);

/*
 * [A a] (+)_2 [b; B] = [[A, a*b], [0, B]], where a is the last column of
 * `left` and b the first row of `right`. Both glue vectors must be nonzero
 * (a zero glue would hide a 1-sum).
 */
IntMatrix two_sum(const IntMatrix& left, const IntMatrix& right);

enum class ThreeSumVariant {
    /// [[A, a, a], [c, 0, 1]] (+) [[1, 0, b], [d, d, B]] = [[A, a*b], [d*c, B]]
    delta,
    /// [[A, 0], [b, 1], [c, 1]] (+) [[1, 1, 0], [a, d, B]] = [[A, 0], [D, B]],
    /// D = [a|d] * inv(Dbar) * [b; c], where Dbar is both the last two columns
    /// of [b; c] and the first two rows of [a|d].
    alt,
};

/// Throws DimensionError on shape violations, InvalidArgument when Dbar is
/// singular or D is not a {0,+1,-1} integer matrix.
IntMatrix three_sum(const IntMatrix& left, const IntMatrix& right, ThreeSumVariant variant);

/// All separations of the given order (1 or 2) of the matroid of [I | N].
std::vector<Separation> find_separations(const IntMatrix& n, int order, std::size_t cap = kSeparationCap);

/*
 * Operands of a split together with where their rows and columns came from.
 * two_sum / one_sum of (left, right) equals
 * submatrix(N, top_rows ++ bottom_rows, top_cols ++ bottom_cols).
 * For order 2 the glue is the last column of `left` and the first row of `right`.
 */
struct Split {
    int order = 1;
    IntMatrix left;
    IntMatrix right;
    IndexSet top_rows, top_cols;
    IndexSet bottom_rows, bottom_cols;
};

Split split_detailed(const IntMatrix& n, const Separation& s);
std::pair<IntMatrix, IntMatrix> split(const IntMatrix& n, const Separation& s);

/// Node of a 1-/2-sum decomposition tree.
struct SumNode {
    enum class Kind { leaf, sum1, sum2 };

    Kind kind = Kind::leaf;
    IntMatrix block;                ///< leaf only
    bool incomplete = false;        ///< leaf not searched further (cap exceeded)
    std::vector<SumNode> children;  ///< {left, right} for sums

    // sum2 glue: position of the glue column in recompose(left), position of
    // the glue row in recompose(right), and the glue vectors themselves.
    std::size_t left_glue_col = 0;
    std::size_t right_glue_row = 0;
    std::vector<Entry> glue_a;
    std::vector<Entry> glue_b;

    static SumNode leaf(IntMatrix m);

    const SumNode& left() const { return children.at(0); }
    const SumNode& right() const { return children.at(1); }

    std::size_t leaf_count() const;
    std::vector<IntMatrix> leaves() const;
};

const char* to_string(SumNode::Kind kind);

struct Decomposition {
    SumNode tree;
    /// recompose(tree) == submatrix(N, row_order, col_order).
    IndexSet row_order;
    IndexSet col_order;
    bool complete = true;
};

/*
 * Recursive split along separations: all order-1 splits first, then order-2,
 * always taking the lexicographically smallest separation. Leaves admit no
 * separation of order 1 or 2. A level whose ground set exceeds `cap` becomes
 * an incomplete leaf and the result is flagged incomplete.
 */
Decomposition decompose(const IntMatrix& n, std::size_t cap = kSeparationCap);

/// Bottom-up one_sum / two_sum; throws InvalidArgument on inconsistent glue.
IntMatrix recompose(const SumNode& t);

}  // namespace sumod

#endif
