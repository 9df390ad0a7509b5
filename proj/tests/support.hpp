#ifndef SUMOD_TESTS_SUPPORT_HPP
#define SUMOD_TESTS_SUPPORT_HPP

// Independent oracles and generators used only by the tests.

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "sumod/catalog.hpp"
#include "sumod/int_matrix.hpp"

namespace oracle {

using sumod::Entry;
using sumod::IndexSet;
using sumod::IntMatrix;

// Laplace expansion along the first row.
inline Entry cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Entry total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, k = 0; c < n; ++c)
                if (c != j) minor(r - 1, k++) = m(r, c);
        Entry term = m(0, j) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

inline IntMatrix pick(const IntMatrix& m, const IndexSet& rows, const IndexSet& cols) {
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
    return out;
}

// Every k-subset of {0..n-1} in lexicographic order.
inline std::vector<IndexSet> subsets(std::size_t n, std::size_t k) {
    std::vector<IndexSet> out;
    IndexSet cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline bool brute_tu(const IntMatrix& m) {
    const std::size_t top = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= top; ++k)
        for (const auto& rs : subsets(m.rows(), k))
            for (const auto& cs : subsets(m.cols(), k))
                if (std::llabs(cofactor_det(pick(m, rs, cs))) > 1) return false;
    return true;
}

inline bool brute_su(const IntMatrix& m) {
    if (!brute_tu(m)) return false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c) == 0) continue;
            IntMatrix z = m;
            z(r, c) = 0;
            if (!brute_tu(z)) return false;
        }
    }
    return true;
}

// Rank over the rationals: largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const IntMatrix& m) {
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
        for (const auto& rs : subsets(m.rows(), k))
            for (const auto& cs : subsets(m.cols(), k))
                if (cofactor_det(pick(m, rs, cs)) != 0) return k;
    return 0;
}

// Rank over GF(2) by plain row reduction on a vector<vector<int>>.
inline std::size_t row_reduction_gf2_rank(const IntMatrix& m) {
    std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = static_cast<int>(((m(r, c) % 2) + 2) % 2);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != rank && a[r][c])
                for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] ^= a[rank][k];
        ++rank;
    }
    return rank;
}

inline IntMatrix random_signed_unit(sumod::CorpusRng& rng, std::size_t rows, std::size_t cols, unsigned zero_pct = 40) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rng.below(100) < zero_pct ? 0 : rng.sign();
    return m;
}

inline IntMatrix random_network_matrix(sumod::CorpusRng& rng, std::size_t vertices, std::size_t extra) {
    auto [g, tree] = sumod::random_network(rng, vertices, extra);
    return sumod::network_matrix(g, tree);
}

}  // namespace oracle

#endif
