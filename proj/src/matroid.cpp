#include "sumod/matroid.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sumod/catalog.hpp"
#include "sumod/errors.hpp"

namespace sumod {

namespace {

// Rank over GF(2) of a family of bit vectors (xor basis keyed by top bit).
std::size_t xor_rank(std::span<const std::uint64_t> vs) {
    std::uint64_t basis[64] = {};
    std::size_t rank = 0;
    for (auto v : vs) {
        while (v) {
            const int top = 63 - std::countl_zero(v);
            if (!basis[top]) {
                basis[top] = v;
                ++rank;
                break;
            }
            v ^= basis[top];
        }
    }
    return rank;
}

std::uint64_t low_bits(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

ReprMatroid::ReprMatroid(IntMatrix base) : base_(std::move(base)) {
    if (base_.rows() > 64 || base_.cols() > 64) throw CapExceeded("ReprMatroid: at most 64 rows and 64 columns");
    const std::size_t m = base_.rows();
    vectors_.reserve(ground_size());
    for (std::size_t i = 0; i < m; ++i) vectors_.push_back(std::uint64_t{1} << i);
    for (std::size_t j = 0; j < base_.cols(); ++j) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (base_(i, j) % 2 != 0) v |= std::uint64_t{1} << i;
        vectors_.push_back(v);
    }
}

std::size_t ReprMatroid::rank_of(const ElementSet& x) const {
    std::vector<std::uint64_t> vs;
    vs.reserve(x.size());
    for (auto e : x) {
        if (e >= ground_size()) throw IndexError("rank_of: element " + std::to_string(e) + " not in ground set");
        vs.push_back(vectors_[e]);
    }
    return xor_rank(vs);
}

std::size_t ReprMatroid::rank_of_mask(std::uint64_t x) const {
    if (ground_size() < 64 && (x >> ground_size()) != 0) throw IndexError("rank_of_mask: element outside ground set");
    std::uint64_t buf[64];
    std::size_t k = 0;
    for (; x; x &= x - 1) buf[k++] = vectors_[std::countr_zero(x)];
    return xor_rank({buf, k});
}

std::size_t ReprMatroid::lambda(const ElementSet& x) const {
    std::vector<bool> in(ground_size(), false);
    for (auto e : x) {
        if (e >= ground_size()) throw IndexError("lambda: element " + std::to_string(e) + " not in ground set");
        in[e] = true;
    }
    ElementSet y;
    for (std::size_t e = 0; e < ground_size(); ++e)
        if (!in[e]) y.push_back(e);
    const std::size_t xs = ground_size() - y.size();
    if (xs == 0 || y.empty()) throw InvalidArgument("lambda: X must be a nonempty proper subset of the ground set");
    return rank_of(x) + rank_of(y) - basis_size();
}

std::string ReprMatroid::label(std::size_t e) const {
    if (e >= ground_size()) throw IndexError("label: element out of range");
    return e < basis_size() ? "r" + std::to_string(e) : "c" + std::to_string(e - basis_size());
}

std::size_t ReprMatroid::element(std::string_view label) const {
    if (label.size() < 2 || (label[0] != 'r' && label[0] != 'c')) {
        throw ParseError("element label must look like r<i> or c<j>: '" + std::string(label) + "'");
    }
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), idx);
    if (ec != std::errc() || ptr != label.data() + label.size()) {
        throw ParseError("bad element label '" + std::string(label) + "'");
    }
    const std::size_t bound = label[0] == 'r' ? base_.rows() : base_.cols();
    if (idx >= bound) throw IndexError("element label '" + std::string(label) + "' out of range");
    return label[0] == 'r' ? idx : basis_size() + idx;
}

ElementSet elements_of(const ReprMatroid& m, const IndexSet& rows, const IndexSet& cols) {
    require_indices(rows, m.base().rows(), "elements_of rows");
    require_indices(cols, m.base().cols(), "elements_of cols");
    ElementSet x(rows.begin(), rows.end());
    for (auto c : cols) x.push_back(m.basis_size() + c);
    std::sort(x.begin(), x.end());
    return x;
}

namespace {

// Matrix-coordinate view used by the separation kernels.
struct BitMatrix {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::uint64_t> row_bits;  // columns with odd entries, per row

    explicit BitMatrix(const IntMatrix& a) : m(a.rows()), n(a.cols()), row_bits(a.rows(), 0) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a(i, j) % 2 != 0) row_bits[i] |= std::uint64_t{1} << j;
    }

    // Rank of the block on the rows in `rows` and the columns in `cols`.
    std::size_t block_rank(std::uint64_t rows, std::uint64_t cols) const {
        std::uint64_t buf[64];
        std::size_t k = 0;
        for (; rows; rows &= rows - 1) {
            const auto v = row_bits[std::countr_zero(rows)] & cols;
            if (v) buf[k++] = v;
        }
        return xor_rank({buf, k});
    }
};

IndexSet bits_to_set(std::uint64_t bits) {
    IndexSet s;
    for (; bits; bits &= bits - 1) s.push_back(std::countr_zero(bits));
    return s;
}

Separation make_separation(const BitMatrix& bm, std::uint64_t r1, std::uint64_t c1, int order) {
    const auto r2 = low_bits(bm.m) & ~r1;
    const auto c2 = low_bits(bm.n) & ~c1;
    Separation s;
    s.row_split = {bits_to_set(r1), bits_to_set(r2)};
    s.col_split = {bits_to_set(c1), bits_to_set(c2)};
    s.order = order;
    s.cross_rank_top_right = bm.block_rank(r1, c2);
    s.cross_rank_bottom_left = bm.block_rank(r2, c1);
    return s;
}

bool separation_less(const Separation& a, const Separation& b) {
    if (a.row_split.first != b.row_split.first) return a.row_split.first < b.row_split.first;
    return a.col_split.first < b.col_split.first;
}

void check_separation_args(const IntMatrix& n, int order, std::size_t cap) {
    if (order != 1 && order != 2) throw InvalidArgument("separation order must be 1 or 2");
    const std::size_t g = n.rows() + n.cols();
    const std::size_t eff = std::min<std::size_t>(cap, 30);
    if (g > eff) {
        throw CapExceeded("separation search: ground set of " + std::to_string(g) + " elements exceeds cap " +
                          std::to_string(eff));
    }
}

// Visits every split with element 0 on the left. `visit(r1, c1, left_size)`
// receives the left side in matrix coordinates.
template <typename Visit>
void for_each_split_range(std::size_t m, std::size_t n, std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
    const std::size_t g = m + n;
    for (std::uint64_t rest = lo; rest < hi; ++rest) {
        const std::uint64_t x = (rest << 1) | 1;
        if (x == low_bits(g)) continue;
        const std::uint64_t r1 = x & low_bits(m);
        const std::uint64_t c1 = x >> m;
        visit(r1, c1, static_cast<std::size_t>(std::popcount(x)));
    }
}

}  // namespace

Separation separation_of(const ReprMatroid& m, const ElementSet& x) {
    if (m.ground_size() > 64) throw CapExceeded("separation_of: ground set too large");
    std::uint64_t r1 = 0, c1 = 0;
    for (auto e : x) {
        if (e >= m.ground_size()) throw IndexError("separation_of: element out of range");
        if (e < m.basis_size()) {
            r1 |= std::uint64_t{1} << e;
        } else {
            c1 |= std::uint64_t{1} << (e - m.basis_size());
        }
    }
    BitMatrix bm(m.base());
    Separation s = make_separation(bm, r1, c1, 1);
    s.order = static_cast<int>(s.cross_rank_top_right + s.cross_rank_bottom_left) + 1;
    return s;
}

std::vector<Separation> separations_of_order(const IntMatrix& n, int order, std::size_t cap) {
    check_separation_args(n, order, cap);
    const std::size_t g = n.rows() + n.cols();
    if (g < 2) return {};
    const BitMatrix bm(n);
    const std::size_t want = static_cast<std::size_t>(order - 1);
    const std::size_t min_side = static_cast<std::size_t>(order);
    const std::uint64_t total = std::uint64_t{1} << (g - 1);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    const std::uint64_t chunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(threads) * 8);
    std::vector<std::vector<Separation>> found(chunks);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (total > 4096)
#endif
    for (long k = 0; k < static_cast<long>(chunks); ++k) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(k) / chunks;
        const std::uint64_t hi = total * static_cast<std::uint64_t>(k + 1) / chunks;
        auto& out = found[static_cast<std::size_t>(k)];
        for_each_split_range(bm.m, bm.n, lo, hi, [&](std::uint64_t r1, std::uint64_t c1, std::size_t left) {
            if (left < min_side || g - left < min_side) return;
            const std::uint64_t r2 = low_bits(bm.m) & ~r1;
            const std::uint64_t c2 = low_bits(bm.n) & ~c1;
            const std::size_t tr = bm.block_rank(r1, c2);
            if (tr > want) return;
            if (tr + bm.block_rank(r2, c1) != want) return;
            out.push_back(make_separation(bm, r1, c1, order));
        });
    }

    std::vector<Separation> all;
    for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(all));
    std::sort(all.begin(), all.end(), separation_less);
    return all;
}

namespace reference {

std::vector<Separation> separations_of_order(const IntMatrix& n, int order, std::size_t cap) {
    check_separation_args(n, order, cap);
    const ReprMatroid mat(n);
    const std::size_t g = mat.ground_size();
    std::vector<Separation> all;
    if (g < 2) return all;
    const auto min_side = static_cast<std::size_t>(order);
    for (std::uint64_t x = 1; x < low_bits(g); x += 2) {
        ElementSet left;
        for (std::size_t e = 0; e < g; ++e)
            if (x >> e & 1) left.push_back(e);
        if (left.size() < min_side || g - left.size() < min_side) continue;
        if (mat.lambda(left) != static_cast<std::size_t>(order - 1)) continue;
        Separation s = separation_of(mat, left);
        s.order = order;
        all.push_back(std::move(s));
    }
    std::sort(all.begin(), all.end(), separation_less);
    return all;
}

}  // namespace reference

ConnectivityReport is_k_connected(const ReprMatroid& m, int k, std::size_t cap) {
    if (k != 2 && k != 3) throw InvalidArgument("is_k_connected: k must be 2 or 3");
    ConnectivityReport report;
    for (int order = 1; order < k; ++order) {
        auto seps = separations_of_order(m.base(), order, cap);
        if (!seps.empty()) {
            report.connected = false;
            report.separation = std::move(seps.front());
            return report;
        }
    }
    return report;
}

std::vector<ElementSet> circuits(const ReprMatroid& m, std::size_t cap) {
    const std::size_t g = m.ground_size();
    if (g > std::min<std::size_t>(cap, 20)) {
        throw CapExceeded("circuits: ground set of " + std::to_string(g) + " elements exceeds cap");
    }
    std::vector<std::uint64_t> masks;
    for (std::uint64_t x = 1; x <= low_bits(g); ++x) {
        const auto size = static_cast<std::size_t>(std::popcount(x));
        if (m.rank_of_mask(x) + 1 != size) continue;
        bool minimal = true;
        for (std::uint64_t rest = x; rest && minimal; rest &= rest - 1) {
            const std::uint64_t without = x & ~(rest & -rest);
            if (m.rank_of_mask(without) != size - 1) minimal = false;
        }
        if (minimal) masks.push_back(x);
    }
    std::vector<ElementSet> out;
    out.reserve(masks.size());
    for (auto x : masks) out.push_back(bits_to_set(x));
    std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<std::size_t> circuit_size_profile(const ReprMatroid& m) {
    std::vector<std::size_t> profile(m.ground_size() + 1, 0);
    for (const auto& c : circuits(m, std::max<std::size_t>(12, m.ground_size()))) ++profile[c.size()];
    return profile;
}

namespace {

struct CircuitIndex {
    std::vector<std::uint64_t> masks;
    std::unordered_set<std::uint64_t> lookup;
    // per element: circuit counts by size (an isomorphism invariant)
    std::vector<std::vector<std::size_t>> signature;
    // circuits grouped by their largest element
    std::vector<std::vector<std::uint64_t>> by_max;

    explicit CircuitIndex(const ReprMatroid& m) : signature(m.ground_size()), by_max(m.ground_size()) {
        for (const auto& c : circuits(m)) {
            std::uint64_t x = 0;
            for (auto e : c) x |= std::uint64_t{1} << e;
            masks.push_back(x);
            lookup.insert(x);
            for (auto e : c) {
                if (signature[e].size() <= c.size()) signature[e].resize(c.size() + 1, 0);
                ++signature[e][c.size()];
            }
            by_max[c.back()].push_back(x);
        }
    }
};

bool find_isomorphism(const CircuitIndex& from, const CircuitIndex& to, std::size_t g) {
    std::vector<std::size_t> image(g, 0);
    std::vector<bool> used(g, false);
    std::function<bool(std::size_t)> dfs = [&](std::size_t e) -> bool {
        if (e == g) return true;
        for (std::size_t t = 0; t < g; ++t) {
            if (used[t] || from.signature[e] != to.signature[t]) continue;
            image[e] = t;
            bool ok = true;
            for (auto c : from.by_max[e]) {
                std::uint64_t mapped = 0;
                for (; c; c &= c - 1) mapped |= std::uint64_t{1} << image[std::countr_zero(c)];
                if (!to.lookup.count(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[t] = true;
            if (dfs(e + 1)) return true;
            used[t] = false;
        }
        return false;
    };
    return dfs(0);
}

}  // namespace

bool is_r10(const IntMatrix& n) {
    if (n.rows() != 5 || n.cols() != 5) return false;
    static const ReprMatroid r10(classic_matrix(Classic::B1));
    static const std::vector<std::size_t> r10_profile = circuit_size_profile(r10);
    static const CircuitIndex r10_index(r10);

    const ReprMatroid candidate(n);
    if (circuit_size_profile(candidate) != r10_profile) return false;
    // Equal circuit counts: an injective map of circuits into circuits is onto.
    return find_isomorphism(CircuitIndex(candidate), r10_index, 10);
}

}  // namespace sumod
