#include "minor_scan.hpp"

#include <bit>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sumod::detail {

namespace {

using Mask = std::uint32_t;

// Row-prefix dynamic program. For a prefix of rows r_1 < ... < r_i the level-i
// table holds det(M[{r_1..r_i}, C]) for every column set C with |C| = i; a new
// row extends it by Laplace expansion along that (last) row.
class Scanner {
public:
    Scanner(const IntMatrix& m, bool transposed, std::optional<std::pair<std::size_t, std::size_t>> through)
        : m_(m), transposed_(transposed), through_(through) {
        const std::size_t n = m.cols();
        max_order_ = std::min(m.rows(), n);
        by_pop_.assign(n + 1, {});
        for (Mask mask = 0; mask < (Mask{1} << n); ++mask) by_pop_[std::popcount(mask)].push_back(mask);
        levels_.assign(max_order_ + 1, std::vector<Entry>(std::size_t{1} << n, 0));
        levels_[0][0] = 1;
    }

    ScanResult run_from(std::size_t first_row) {
        result_ = {};
        limit_ = max_order_;
        prefix_.clear();
        extend(0, first_row);
        return result_;
    }

private:
    bool row_allowed(std::size_t r) const { return !through_ || r <= through_->first; }

    bool prefix_has_through_row() const {
        for (auto r : prefix_)
            if (r == through_->first) return true;
        return false;
    }

    void extend(std::size_t depth, std::size_t row) {
        const std::vector<Entry>& prev = levels_[depth];
        std::vector<Entry>& cur = levels_[depth + 1];
        const auto r = m_.row(row);
        prefix_.push_back(row);
        const bool rows_ok = !through_ || prefix_has_through_row();
        const Mask need = through_ ? Mask{1} << through_->second : 0;

        for (Mask mask : by_pop_[depth + 1]) {
            Entry v = 0;
            std::size_t pos = 0;
            for (Mask rest = mask; rest; rest &= rest - 1, ++pos) {
                const int j = std::countr_zero(rest);
                if (r[j] == 0) continue;
                const Entry term = r[j] * prev[mask ^ (Mask{1} << j)];
                v += ((depth + pos) % 2 == 0) ? term : -term;
            }
            cur[mask] = v;
            ++result_.evaluated;
            if ((v >= 2 || v <= -2) && rows_ok && (mask & need) == need) record(mask, v);
        }

        if (depth + 1 < limit_) {
            for (std::size_t next = row + 1; next < m_.rows(); ++next) {
                if (through_ && !rows_ok && next > through_->first) break;
                extend(depth + 1, next);
                if (depth + 1 >= limit_) break;
            }
        }
        prefix_.pop_back();
    }

    void record(Mask mask, Entry v) {
        Witness w;
        IndexSet cols;
        for (Mask rest = mask; rest; rest &= rest - 1) cols.push_back(std::countr_zero(rest));
        if (transposed_) {
            w.rows = std::move(cols);
            w.cols = prefix_;
        } else {
            w.rows = prefix_;
            w.cols = std::move(cols);
        }
        if (through_) {
            w.zeroed_entry = transposed_ ? std::pair{through_->second, through_->first} : *through_;
        }
        w.determinant = v;
        if (!result_.best || witness_preferred(w, *result_.best)) {
            result_.best = std::move(w);
            limit_ = std::min(limit_, prefix_.size());
        }
    }

    const IntMatrix& m_;
    bool transposed_;
    std::optional<std::pair<std::size_t, std::size_t>> through_;
    std::size_t max_order_ = 0;
    std::size_t limit_ = 0;
    std::vector<std::vector<Mask>> by_pop_;
    std::vector<std::vector<Entry>> levels_;
    IndexSet prefix_;
    ScanResult result_;
};

void merge(ScanResult& into, ScanResult&& part) {
    into.evaluated += part.evaluated;
    if (part.best && (!into.best || witness_preferred(*part.best, *into.best))) into.best = std::move(part.best);
}

}  // namespace

ScanResult scan_minors(const IntMatrix& m, std::optional<std::pair<std::size_t, std::size_t>> through,
                       bool parallel) {
    ScanResult total;
    if (m.empty()) return total;

    // Column subsets are bitmasks, so mask over the smaller dimension.
    const bool transposed = m.cols() > m.rows();
    const IntMatrix oriented = transposed ? m.transposed() : m;
    if (transposed && through) through = std::pair{through->second, through->first};

    const std::size_t first_rows = through ? through->first + 1 : oriented.rows();
    std::vector<ScanResult> parts(first_rows);

#ifdef _OPENMP
#pragma omp parallel if (parallel && first_rows > 1)
#endif
    {
        Scanner scanner(oriented, transposed, through);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
        for (long r = 0; r < static_cast<long>(first_rows); ++r) {
            parts[static_cast<std::size_t>(r)] = scanner.run_from(static_cast<std::size_t>(r));
        }
    }
    (void)parallel;

    for (auto& p : parts) merge(total, std::move(p));
    return total;
}

}  // namespace sumod::detail
