#include <algorithm>
#include <functional>
#include <map>

#include "sumod/exactmat.hpp"

namespace sumod {

namespace {

using Column = std::vector<Entry>;

// Column up to sign: first nonzero made positive. Returns the applied sign.
int normalize(Column& v) {
    for (auto x : v) {
        if (x == 0) continue;
        if (x < 0) {
            for (auto& y : v) y = -y;
            return -1;
        }
        return 1;
    }
    return 1;
}

class EquivalenceSearch {
public:
    EquivalenceSearch(const IntMatrix& from, const IntMatrix& to) : from_(from), to_(to) {}

    std::optional<PermuteScale> run() {
        const std::size_t m = to_.rows();
        row_perm_.assign(m, 0);
        row_signs_.assign(m, 1);
        used_.assign(m, false);
        if (dfs(0)) return result_;
        return std::nullopt;
    }

private:
    // Normalized columns restricted to the first `depth` assigned rows.
    std::vector<Column> partial_columns(const IntMatrix& m, std::size_t depth, bool source) const {
        std::vector<Column> cols(m.cols(), Column(depth));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            for (std::size_t i = 0; i < depth; ++i) {
                cols[j][i] = source ? row_signs_[i] * m(row_perm_[i], j) : m(i, j);
            }
            normalize(cols[j]);
        }
        return cols;
    }

    bool consistent(std::size_t depth) const {
        auto a = partial_columns(from_, depth, true);
        auto b = partial_columns(to_, depth, false);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    bool finish() {
        const std::size_t m = to_.rows();
        const std::size_t n = to_.cols();
        std::map<Column, std::vector<std::pair<std::size_t, int>>> pool;
        for (std::size_t k = 0; k < n; ++k) {
            Column v(m);
            for (std::size_t i = 0; i < m; ++i) v[i] = row_signs_[i] * from_(row_perm_[i], k);
            const int s = normalize(v);
            pool[v].push_back({k, s});
        }
        for (auto& [_, list] : pool) std::reverse(list.begin(), list.end());
        PermuteScale ps{row_perm_, IndexSet(n), row_signs_, std::vector<int>(n, 1)};
        for (std::size_t j = 0; j < n; ++j) {
            Column v(m);
            for (std::size_t i = 0; i < m; ++i) v[i] = to_(i, j);
            const int s = normalize(v);
            auto it = pool.find(v);
            if (it == pool.end() || it->second.empty()) return false;
            auto [k, sk] = it->second.back();
            it->second.pop_back();
            ps.col_perm[j] = k;
            ps.col_signs[j] = s * sk;
        }
        result_ = std::move(ps);
        return true;
    }

    bool dfs(std::size_t depth) {
        if (depth == to_.rows()) return finish();
        const std::size_t target_nz = to_.row_nonzeros(depth);
        for (std::size_t k = 0; k < from_.rows(); ++k) {
            if (used_[k] || from_.row_nonzeros(k) != target_nz) continue;
            used_[k] = true;
            row_perm_[depth] = k;
            for (int s : {1, -1}) {
                // A global sign flip of all rows and columns is free; fix the first row.
                if (depth == 0 && s == -1) break;
                row_signs_[depth] = s;
                if (consistent(depth + 1) && dfs(depth + 1)) return true;
            }
            used_[k] = false;
        }
        return false;
    }

    const IntMatrix& from_;
    const IntMatrix& to_;
    IndexSet row_perm_;
    std::vector<int> row_signs_;
    std::vector<bool> used_;
    PermuteScale result_;
};

std::vector<std::size_t> sorted_counts(const IntMatrix& m, bool rows) {
    std::vector<std::size_t> v;
    const std::size_t n = rows ? m.rows() : m.cols();
    for (std::size_t i = 0; i < n; ++i) v.push_back(rows ? m.row_nonzeros(i) : m.col_nonzeros(i));
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::optional<PermuteScale> find_permute_scale(const IntMatrix& from, const IntMatrix& to) {
    if (from.rows() != to.rows() || from.cols() != to.cols()) return std::nullopt;
    if (sorted_counts(from, true) != sorted_counts(to, true) ||
        sorted_counts(from, false) != sorted_counts(to, false)) {
        return std::nullopt;
    }
    return EquivalenceSearch(from, to).run();
}

}  // namespace sumod
