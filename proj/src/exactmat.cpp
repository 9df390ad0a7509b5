#include "sumod/exactmat.hpp"

#include <array>
#include <limits>
#include <string>
#include <utility>

#include "sumod/errors.hpp"

namespace sumod {

namespace {

using Wide = __int128;

Entry narrow(Wide v, const char* what) {
    if (v > std::numeric_limits<Entry>::max() || v < std::numeric_limits<Entry>::min()) {
        throw OverflowError(std::string(what) + ": intermediate exceeds 64-bit range");
    }
    return static_cast<Entry>(v);
}

// In-place fraction-free elimination. Returns the rank; `sign` collects row
// swaps, `last_pivot` is the final leading minor (the determinant when the
// matrix is square and of full rank).
std::size_t bareiss(std::vector<std::vector<Entry>>& a, std::size_t cols, int& sign,
                    Entry& last_pivot) {
    const std::size_t rows = a.size();
    sign = 1;
    Entry prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Wide v = static_cast<Wide>(a[i][j]) * a[r][c] - static_cast<Wide>(a[i][c]) * a[r][j];
                a[i][j] = narrow(v / prev, "bareiss");
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    last_pivot = prev;
    return r;
}

std::vector<std::vector<Entry>> to_rows(const IntMatrix& m) {
    std::vector<std::vector<Entry>> a(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a[r].assign(m.row(r).begin(), m.row(r).end());
    return a;
}

void require_permutation(const IndexSet& perm, std::size_t n, const char* what) {
    if (perm.size() != n) {
        throw IndexError(std::string(what) + ": permutation has size " + std::to_string(perm.size()) +
                         ", expected " + std::to_string(n));
    }
    require_indices(perm, n, what);
}

void require_signs(const std::vector<int>& signs, std::size_t n, const char* what) {
    if (signs.size() != n) throw IndexError(std::string(what) + ": sign vector has wrong length");
    for (int s : signs) {
        if (s != 1 && s != -1) throw InvalidArgument(std::string(what) + ": signs must be +1 or -1");
    }
}

}  // namespace

Entry det(const IntMatrix& m) {
    if (!m.square()) {
        throw DimensionError("det: matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", not square");
    }
    if (m.rows() > kMaxDeterminantOrder) {
        throw CapExceeded("det: order " + std::to_string(m.rows()) + " exceeds cap " +
                          std::to_string(kMaxDeterminantOrder));
    }
    if (m.rows() == 0) return 1;
    auto a = to_rows(m);
    int sign = 1;
    Entry last = 1;
    if (bareiss(a, m.cols(), sign, last) < m.rows()) return 0;
    return sign * last;
}

std::size_t rank(const IntMatrix& m) {
    auto a = to_rows(m);
    int sign = 1;
    Entry last = 1;
    return bareiss(a, m.cols(), sign, last);
}

std::size_t gf2_rank(const IntMatrix& m) {
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) % 2 != 0) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t p = rank;
        while (p < rows.size() && !(rows[p][c / 64] & bit)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != rank && (rows[i][c / 64] & bit)) {
                for (std::size_t w = 0; w < words; ++w) rows[i][w] ^= rows[rank][w];
            }
        }
        ++rank;
    }
    return rank;
}

IntMatrix submatrix(const IntMatrix& m, const IndexSet& rows, const IndexSet& cols) {
    require_indices(rows, m.rows(), "submatrix rows");
    require_indices(cols, m.cols(), "submatrix cols");
    IntMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
    return s;
}

IntMatrix zeroed(const IntMatrix& m, std::size_t r, std::size_t c) {
    if (r >= m.rows() || c >= m.cols()) throw IndexError("zeroed: entry out of range");
    IntMatrix z = m;
    z(r, c) = 0;
    return z;
}

PermuteScale PermuteScale::identity(std::size_t rows, std::size_t cols) {
    return {iota_set(rows), iota_set(cols), std::vector<int>(rows, 1), std::vector<int>(cols, 1)};
}

IntMatrix permute_scale(const IntMatrix& m, const PermuteScale& ps) {
    return permute_scale(m, ps.row_perm, ps.col_perm, ps.row_signs, ps.col_signs);
}

IntMatrix permute_scale(const IntMatrix& m, const IndexSet& row_perm, const IndexSet& col_perm,
                        const std::vector<int>& row_signs, const std::vector<int>& col_signs) {
    require_permutation(row_perm, m.rows(), "permute_scale rows");
    require_permutation(col_perm, m.cols(), "permute_scale cols");
    require_signs(row_signs, m.rows(), "permute_scale rows");
    require_signs(col_signs, m.cols(), "permute_scale cols");
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = row_signs[i] * col_signs[j] * m(row_perm[i], col_perm[j]);
    return out;
}

IntMatrix pivot(const IntMatrix& m, std::size_t r, std::size_t c) {
    if (r >= m.rows() || c >= m.cols()) throw IndexError("pivot: position out of range");
    require_signed_unit(m, "pivot");
    const Entry e = m(r, c);
    if (e == 0) throw InvalidArgument("pivot: zero pivot entry");
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i == r && j == c) {
                out(i, j) = -e;
            } else if (i == r) {
                out(i, j) = e * m(r, j);
            } else if (j == c) {
                out(i, j) = e * m(i, c);
            } else {
                out(i, j) = m(i, j) - e * m(i, c) * m(r, j);
            }
        }
    }
    return out;
}

IntMatrix extend(const IntMatrix& m, ExtendKind kind, std::size_t index) {
    switch (kind) {
        case ExtendKind::transpose:
            return m.transposed();
        case ExtendKind::zero_row:
        case ExtendKind::unit_row:
        case ExtendKind::repeat_row: {
            if (kind == ExtendKind::unit_row && index >= m.cols())
                throw IndexError("extend unit_row: position out of range");
            if (kind == ExtendKind::repeat_row && index >= m.rows())
                throw IndexError("extend repeat_row: source row out of range");
            IntMatrix out(m.rows() + 1, m.cols());
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
            if (kind == ExtendKind::unit_row) out(m.rows(), index) = 1;
            if (kind == ExtendKind::repeat_row)
                for (std::size_t j = 0; j < m.cols(); ++j) out(m.rows(), j) = m(index, j);
            return out;
        }
        case ExtendKind::zero_col:
        case ExtendKind::unit_col:
        case ExtendKind::repeat_col: {
            if (kind == ExtendKind::unit_col && index >= m.rows())
                throw IndexError("extend unit_col: position out of range");
            if (kind == ExtendKind::repeat_col && index >= m.cols())
                throw IndexError("extend repeat_col: source column out of range");
            IntMatrix out(m.rows(), m.cols() + 1);
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
            if (kind == ExtendKind::unit_col) out(index, m.cols()) = 1;
            if (kind == ExtendKind::repeat_col)
                for (std::size_t i = 0; i < m.rows(); ++i) out(i, m.cols()) = m(i, index);
            return out;
        }
    }
    throw InvalidArgument("extend: unknown kind");
}

const char* to_string(ExtendKind kind) {
    switch (kind) {
        case ExtendKind::transpose: return "transpose";
        case ExtendKind::zero_row: return "zero_row";
        case ExtendKind::zero_col: return "zero_col";
        case ExtendKind::unit_row: return "unit_row";
        case ExtendKind::unit_col: return "unit_col";
        case ExtendKind::repeat_row: return "repeat_row";
        case ExtendKind::repeat_col: return "repeat_col";
    }
    return "?";
}

std::optional<ExtendKind> extend_kind_from_string(std::string_view name) {
    for (auto k : all_extend_kinds())
        if (name == to_string(k)) return k;
    return std::nullopt;
}

const std::vector<ExtendKind>& all_extend_kinds() {
    static const std::vector<ExtendKind> kinds = {
        ExtendKind::transpose, ExtendKind::zero_row,   ExtendKind::zero_col,  ExtendKind::unit_row,
        ExtendKind::unit_col,  ExtendKind::repeat_row, ExtendKind::repeat_col};
    return kinds;
}

}  // namespace sumod
