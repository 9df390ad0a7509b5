#ifndef SUMOD_EXACTMAT_HPP
#define SUMOD_EXACTMAT_HPP

#include <optional>
#include <vector>

#include "sumod/int_matrix.hpp"

namespace sumod {

/// Largest order accepted by the determinant-based routines.
inline constexpr std::size_t kMaxDeterminantOrder = 16;

/*
 * Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
 * Every intermediate is an exact minor of the input, so all divisions are
 * exact. Intermediates are formed in 128-bit arithmetic and an OverflowError
 * is raised if a stored value leaves the 64-bit range.
 *
 * Throws DimensionError for non-square input and CapExceeded above
 * kMaxDeterminantOrder.
 */
Entry det(const IntMatrix& m);

/// Rank over the rationals (fraction-free elimination).
std::size_t rank(const IntMatrix& m);

/// Rank over the two-element field (entries taken mod 2).
std::size_t gf2_rank(const IntMatrix& m);

/// Entries copied in the given index order; throws IndexError when out of range.
IntMatrix submatrix(const IntMatrix& m, const IndexSet& rows, const IndexSet& cols);

/// Copy of `m` with entry (r, c) replaced by zero.
IntMatrix zeroed(const IntMatrix& m, std::size_t r, std::size_t c);

/// Row/column permutation with +-1 scaling:
/// result(i, j) = row_signs[i] * col_signs[j] * m(row_perm[i], col_perm[j]).
struct PermuteScale {
    IndexSet row_perm;
    IndexSet col_perm;
    std::vector<int> row_signs;
    std::vector<int> col_signs;

    static PermuteScale identity(std::size_t rows, std::size_t cols);
};

IntMatrix permute_scale(const IntMatrix& m, const PermuteScale& ps);
IntMatrix permute_scale(const IntMatrix& m, const IndexSet& row_perm, const IndexSet& col_perm,
                        const std::vector<int>& row_signs, const std::vector<int>& col_signs);

/*
 * Pivot of a compact representation matrix on the nonzero entry (r, c):
 *
 *     [ e  b ]        [ -e    e*b        ]
 *     [ a  D ]  --->  [ e*a   D - e*a*b  ]
 *
 * with e = m(r, c) in {-1, +1}. Row r and column c exchange their basis /
 * cobasis roles. Maps TU matrices to TU matrices and preserves the represented
 * binary matroid; applying it twice restores `m` with row r and column c
 * negated.
 */
IntMatrix pivot(const IntMatrix& m, std::size_t r, std::size_t c);

enum class ExtendKind { transpose, zero_row, zero_col, unit_row, unit_col, repeat_row, repeat_col };

/*
 * The SU-preserving extensions. The new row/column is appended last.
 *   unit_row / unit_col: `index` is the position of the single 1.
 *   repeat_row / repeat_col: `index` is the row/column being copied.
 *   transpose, zero_row, zero_col ignore `index`.
 */
IntMatrix extend(const IntMatrix& m, ExtendKind kind, std::size_t index = 0);

const char* to_string(ExtendKind kind);
std::optional<ExtendKind> extend_kind_from_string(std::string_view name);

/// All seven kinds, in declaration order.
const std::vector<ExtendKind>& all_extend_kinds();

/*
 * Searches for a PermuteScale `ps` with permute_scale(from, ps) == to.
 * Backtracking over row images with lazily fixed row signs; meant for
 * desk-scale matrices (a few hundred thousand nodes at 6x6).
 */
std::optional<PermuteScale> find_permute_scale(const IntMatrix& from, const IntMatrix& to);

inline bool permute_scale_equivalent(const IntMatrix& a, const IntMatrix& b) {
    return find_permute_scale(a, b).has_value();
}

}  // namespace sumod

#endif
