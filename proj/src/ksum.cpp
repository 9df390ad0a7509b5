#include "sumod/ksum.hpp"

#include <algorithm>
#include <string>

#include "sumod/errors.hpp"
#include "sumod/exactmat.hpp"

namespace sumod {

IntMatrix one_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

IntMatrix two_sum(const IntMatrix& left, const IntMatrix& right) {
    if (left.cols() == 0 || right.rows() == 0) {
        throw DimensionError("two_sum: left needs a glue column and right a glue row");
    }
    const std::size_t ma = left.rows(), na = left.cols() - 1;
    const std::size_t mb = right.rows() - 1, nb = right.cols();
    bool a_nonzero = false, b_nonzero = false;
    for (std::size_t i = 0; i < ma; ++i) a_nonzero |= left(i, na) != 0;
    for (std::size_t j = 0; j < nb; ++j) b_nonzero |= right(0, j) != 0;
    if (!a_nonzero || !b_nonzero) throw InvalidArgument("two_sum: glue vectors must be nonzero");

    IntMatrix out(ma + mb, na + nb);
    for (std::size_t i = 0; i < ma; ++i) {
        for (std::size_t j = 0; j < na; ++j) out(i, j) = left(i, j);
        for (std::size_t j = 0; j < nb; ++j) out(i, na + j) = left(i, na) * right(0, j);
    }
    for (std::size_t i = 0; i < mb; ++i)
        for (std::size_t j = 0; j < nb; ++j) out(ma + i, na + j) = right(1 + i, j);
    return out;
}

namespace {

IntMatrix three_sum_delta(const IntMatrix& left, const IntMatrix& right) {
    if (left.rows() < 1 || left.cols() < 2 || right.rows() < 1 || right.cols() < 2) {
        throw DimensionError("three_sum delta: operands too small");
    }
    const std::size_t ma = left.rows() - 1, na = left.cols() - 2;
    const std::size_t mb = right.rows() - 1, nb = right.cols() - 2;
    for (std::size_t i = 0; i < ma; ++i) {
        if (left(i, na) != left(i, na + 1))
            throw DimensionError("three_sum delta: left operand must end with two equal columns [a a]");
    }
    if (left(ma, na) != 0 || left(ma, na + 1) != 1)
        throw DimensionError("three_sum delta: left operand must end with row [c 0 1]");
    if (right(0, 0) != 1 || right(0, 1) != 0)
        throw DimensionError("three_sum delta: right operand must start with row [1 0 b]");
    for (std::size_t i = 1; i <= mb; ++i) {
        if (right(i, 0) != right(i, 1))
            throw DimensionError("three_sum delta: right operand must start with two equal columns [d d]");
    }
    IntMatrix out(ma + mb, na + nb);
    for (std::size_t i = 0; i < ma; ++i) {
        for (std::size_t j = 0; j < na; ++j) out(i, j) = left(i, j);
        for (std::size_t j = 0; j < nb; ++j) out(i, na + j) = left(i, na) * right(0, 2 + j);
    }
    for (std::size_t i = 0; i < mb; ++i) {
        for (std::size_t j = 0; j < na; ++j) out(ma + i, j) = right(1 + i, 0) * left(ma, j);
        for (std::size_t j = 0; j < nb; ++j) out(ma + i, na + j) = right(1 + i, 2 + j);
    }
    return out;
}

IntMatrix three_sum_alt(const IntMatrix& left, const IntMatrix& right) {
    if (left.rows() < 2 || left.cols() < 3 || right.rows() < 3 || right.cols() < 2) {
        throw DimensionError("three_sum alt: operands too small (need two glue rows/columns and a 2x2 Dbar)");
    }
    const std::size_t ma = left.rows() - 2, na = left.cols() - 1;
    const std::size_t mb = right.rows() - 1, nb = right.cols() - 2;
    for (std::size_t i = 0; i < ma; ++i)
        if (left(i, na) != 0) throw DimensionError("three_sum alt: left operand must end with column [0; 1; 1]");
    if (left(ma, na) != 1 || left(ma + 1, na) != 1)
        throw DimensionError("three_sum alt: left operand must end with column [0; 1; 1]");
    if (right(0, 0) != 1 || right(0, 1) != 1)
        throw DimensionError("three_sum alt: right operand must start with row [1 1 0]");
    for (std::size_t j = 0; j < nb; ++j)
        if (right(0, 2 + j) != 0) throw DimensionError("three_sum alt: right operand must start with row [1 1 0]");

    // [b; c] is 2 x na, [a | d] is mb x 2; Dbar is their shared 2x2 block.
    auto bc = [&](std::size_t r, std::size_t j) { return left(ma + r, j); };
    auto ad = [&](std::size_t i, std::size_t k) { return right(1 + i, k); };
    const Entry p = bc(0, na - 2), q = bc(0, na - 1), r = bc(1, na - 2), s = bc(1, na - 1);
    if (ad(0, 0) != p || ad(0, 1) != q || ad(1, 0) != r || ad(1, 1) != s) {
        throw DimensionError("three_sum alt: last two columns of [b; c] must equal the first two rows of [a | d]");
    }
    const Entry dbar_det = p * s - q * r;
    if (dbar_det == 0) throw InvalidArgument("three_sum alt: Dbar is singular (glue vectors are dependent)");

    IntMatrix out(ma + mb, na + nb);
    for (std::size_t i = 0; i < ma; ++i)
        for (std::size_t j = 0; j < na; ++j) out(i, j) = left(i, j);
    for (std::size_t i = 0; i < mb; ++i) {
        // row i of [a|d] * adj(Dbar)
        const Entry u = ad(i, 0) * s - ad(i, 1) * r;
        const Entry v = -ad(i, 0) * q + ad(i, 1) * p;
        for (std::size_t j = 0; j < na; ++j) {
            const Entry num = u * bc(0, j) + v * bc(1, j);
            if (num % dbar_det != 0) throw InvalidArgument("three_sum alt: D is not integral");
            const Entry val = num / dbar_det;
            if (val < -1 || val > 1) throw InvalidArgument("three_sum alt: D has entries outside {-1,0,1}");
            out(ma + i, j) = val;
        }
        for (std::size_t j = 0; j < nb; ++j) out(ma + i, na + j) = right(1 + i, 2 + j);
    }
    return out;
}

}  // namespace

IntMatrix three_sum(const IntMatrix& left, const IntMatrix& right, ThreeSumVariant variant) {
    return variant == ThreeSumVariant::delta ? three_sum_delta(left, right) : three_sum_alt(left, right);
}

std::vector<Separation> find_separations(const IntMatrix& n, int order, std::size_t cap) {
    return separations_of_order(n, order, cap);
}

namespace {

void require_partition(const std::pair<IndexSet, IndexSet>& split, std::size_t bound, const char* what) {
    IndexSet all = split.first;
    all.insert(all.end(), split.second.begin(), split.second.end());
    if (all.size() != bound) throw InvalidArgument(std::string(what) + ": split does not cover every index once");
    require_indices(all, bound, what);
}

bool all_zero(const IntMatrix& m) {
    return std::all_of(m.entries().begin(), m.entries().end(), [](Entry v) { return v == 0; });
}

}  // namespace

Split split_detailed(const IntMatrix& n, const Separation& s) {
    require_partition(s.row_split, n.rows(), "split rows");
    require_partition(s.col_split, n.cols(), "split cols");
    if (s.order != 1 && s.order != 2) throw InvalidArgument("split: order must be 1 or 2");
    const auto& [r1, r2] = s.row_split;
    const auto& [c1, c2] = s.col_split;
    if (s.left_size() < static_cast<std::size_t>(s.order) || s.right_size() < static_cast<std::size_t>(s.order)) {
        throw InvalidArgument("split: each side needs at least `order` elements");
    }
    const IntMatrix tr = submatrix(n, r1, c2);
    const IntMatrix bl = submatrix(n, r2, c1);

    Split out;
    out.order = s.order;
    if (s.order == 1) {
        if (!all_zero(tr) || !all_zero(bl)) throw InvalidArgument("split: order-1 separation with nonzero cross block");
        out.left = submatrix(n, r1, c1);
        out.right = submatrix(n, r2, c2);
        out.top_rows = r1, out.top_cols = c1, out.bottom_rows = r2, out.bottom_cols = c2;
        return out;
    }

    const bool tr_zero = all_zero(tr), bl_zero = all_zero(bl);
    if (tr_zero == bl_zero) {
        throw InvalidArgument("split: order-2 separation needs exactly one nonzero cross block");
    }
    // Orient so the rank-1 cross block sits top-right.
    const bool swap = tr_zero;
    out.top_rows = swap ? r2 : r1;
    out.top_cols = swap ? c2 : c1;
    out.bottom_rows = swap ? r1 : r2;
    out.bottom_cols = swap ? c1 : c2;
    const IntMatrix& cross = swap ? bl : tr;

    std::size_t j0 = 0;
    while (cross.col_nonzeros(j0) == 0) ++j0;
    std::vector<Entry> a(cross.rows());
    for (std::size_t i = 0; i < cross.rows(); ++i) a[i] = cross(i, j0);
    std::size_t i0 = 0;
    while (a[i0] == 0) ++i0;
    if (a[i0] != 1 && a[i0] != -1) throw InvalidArgument("split: cross block is not a {0,+1,-1} matrix");
    std::vector<Entry> b(cross.cols());
    for (std::size_t j = 0; j < cross.cols(); ++j) b[j] = cross(i0, j) * a[i0];
    for (std::size_t i = 0; i < cross.rows(); ++i)
        for (std::size_t j = 0; j < cross.cols(); ++j)
            if (a[i] * b[j] != cross(i, j)) throw InvalidArgument("split: cross block is not of rank 1");

    const IntMatrix top = submatrix(n, out.top_rows, out.top_cols);
    const IntMatrix bottom = submatrix(n, out.bottom_rows, out.bottom_cols);
    out.left = IntMatrix(top.rows(), top.cols() + 1);
    for (std::size_t i = 0; i < top.rows(); ++i) {
        for (std::size_t j = 0; j < top.cols(); ++j) out.left(i, j) = top(i, j);
        out.left(i, top.cols()) = a[i];
    }
    out.right = IntMatrix(bottom.rows() + 1, bottom.cols());
    for (std::size_t j = 0; j < bottom.cols(); ++j) out.right(0, j) = b[j];
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j) out.right(1 + i, j) = bottom(i, j);
    return out;
}

std::pair<IntMatrix, IntMatrix> split(const IntMatrix& n, const Separation& s) {
    Split d = split_detailed(n, s);
    return {std::move(d.left), std::move(d.right)};
}

SumNode SumNode::leaf(IntMatrix m) {
    SumNode node;
    node.kind = Kind::leaf;
    node.block = std::move(m);
    return node;
}

std::size_t SumNode::leaf_count() const {
    if (kind == Kind::leaf) return 1;
    return left().leaf_count() + right().leaf_count();
}

std::vector<IntMatrix> SumNode::leaves() const {
    if (kind == Kind::leaf) return {block};
    auto out = left().leaves();
    auto more = right().leaves();
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

const char* to_string(SumNode::Kind kind) {
    switch (kind) {
        case SumNode::Kind::leaf: return "leaf";
        case SumNode::Kind::sum1: return "sum1";
        case SumNode::Kind::sum2: return "sum2";
    }
    return "?";
}

namespace {

IndexSet compose_index(const IndexSet& outer, const IndexSet& inner) {
    IndexSet out;
    out.reserve(inner.size());
    for (auto i : inner) out.push_back(outer[i]);
    return out;
}

IntMatrix move_col_to_end(const IntMatrix& m, std::size_t col) {
    IndexSet cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j != col) cols.push_back(j);
    cols.push_back(col);
    return submatrix(m, iota_set(m.rows()), cols);
}

IntMatrix move_row_to_front(const IntMatrix& m, std::size_t row) {
    IndexSet rows{row};
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (i != row) rows.push_back(i);
    return submatrix(m, rows, iota_set(m.cols()));
}

Decomposition decompose_rec(const IntMatrix& n, std::size_t cap) {
    Decomposition out;
    out.row_order = iota_set(n.rows());
    out.col_order = iota_set(n.cols());
    if (n.rows() + n.cols() > cap) {
        out.tree = SumNode::leaf(n);
        out.tree.incomplete = true;
        out.complete = false;
        return out;
    }

    for (int order = 1; order <= 2; ++order) {
        auto seps = find_separations(n, order, cap);
        if (seps.empty()) continue;
        const Split s = split_detailed(n, seps.front());
        Decomposition l = decompose_rec(s.left, cap);
        Decomposition r = decompose_rec(s.right, cap);
        out.complete = l.complete && r.complete;

        SumNode node;
        if (order == 1) {
            node.kind = SumNode::Kind::sum1;
            out.row_order = compose_index(s.top_rows, l.row_order);
            auto rr = compose_index(s.bottom_rows, r.row_order);
            out.row_order.insert(out.row_order.end(), rr.begin(), rr.end());
            out.col_order = compose_index(s.top_cols, l.col_order);
            auto rc = compose_index(s.bottom_cols, r.col_order);
            out.col_order.insert(out.col_order.end(), rc.begin(), rc.end());
        } else {
            node.kind = SumNode::Kind::sum2;
            const std::size_t glue_col = s.top_cols.size();  // last column of s.left
            node.left_glue_col = static_cast<std::size_t>(
                std::find(l.col_order.begin(), l.col_order.end(), glue_col) - l.col_order.begin());
            node.right_glue_row = static_cast<std::size_t>(
                std::find(r.row_order.begin(), r.row_order.end(), 0) - r.row_order.begin());
            for (std::size_t i = 0; i < s.left.rows(); ++i) node.glue_a.push_back(s.left(l.row_order[i], glue_col));
            for (std::size_t j = 0; j < s.right.cols(); ++j) node.glue_b.push_back(s.right(0, r.col_order[j]));

            out.row_order = compose_index(s.top_rows, l.row_order);
            for (auto i : r.row_order)
                if (i != 0) out.row_order.push_back(s.bottom_rows[i - 1]);
            out.col_order.clear();
            for (auto j : l.col_order)
                if (j != glue_col) out.col_order.push_back(s.top_cols[j]);
            auto rc = compose_index(s.bottom_cols, r.col_order);
            out.col_order.insert(out.col_order.end(), rc.begin(), rc.end());
        }
        node.children.push_back(std::move(l.tree));
        node.children.push_back(std::move(r.tree));
        out.tree = std::move(node);
        return out;
    }
    out.tree = SumNode::leaf(n);
    return out;
}

}  // namespace

Decomposition decompose(const IntMatrix& n, std::size_t cap) { return decompose_rec(n, cap); }

IntMatrix recompose(const SumNode& t) {
    switch (t.kind) {
        case SumNode::Kind::leaf:
            return t.block;
        case SumNode::Kind::sum1:
            if (t.children.size() != 2) throw InvalidArgument("recompose: sum node needs two children");
            return one_sum(recompose(t.left()), recompose(t.right()));
        case SumNode::Kind::sum2: {
            if (t.children.size() != 2) throw InvalidArgument("recompose: sum node needs two children");
            const IntMatrix l = recompose(t.left());
            const IntMatrix r = recompose(t.right());
            if (t.left_glue_col >= l.cols() || t.right_glue_row >= r.rows()) {
                throw InvalidArgument("recompose: glue position out of range");
            }
            if (!t.glue_a.empty()) {
                bool ok = t.glue_a.size() == l.rows();
                for (std::size_t i = 0; ok && i < l.rows(); ++i) ok = l(i, t.left_glue_col) == t.glue_a[i];
                if (!ok) throw InvalidArgument("recompose: glue column does not match the left operand");
            }
            if (!t.glue_b.empty()) {
                bool ok = t.glue_b.size() == r.cols();
                for (std::size_t j = 0; ok && j < r.cols(); ++j) ok = r(t.right_glue_row, j) == t.glue_b[j];
                if (!ok) throw InvalidArgument("recompose: glue row does not match the right operand");
            }
            return two_sum(move_col_to_end(l, t.left_glue_col), move_row_to_front(r, t.right_glue_row));
        }
    }
    throw InvalidArgument("recompose: unknown node kind");
}

}  // namespace sumod
