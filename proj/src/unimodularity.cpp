#include "sumod/unimodularity.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "minor_scan.hpp"
#include "sumod/errors.hpp"
#include "sumod/exactmat.hpp"

namespace sumod {

const char* to_string(Property p) { return p == Property::tu ? "tu" : "su"; }

bool witness_preferred(const Witness& a, const Witness& b) {
    if (a.rows.size() != b.rows.size()) return a.rows.size() < b.rows.size();
    if (a.rows != b.rows) return a.rows > b.rows;
    if (a.cols != b.cols) return a.cols > b.cols;
    return a.zeroed_entry > b.zeroed_entry;
}

namespace {

void check_caps(const IntMatrix& m, const OracleCaps& caps, const char* what) {
    require_signed_unit(m, what);
    const std::size_t order = std::min(m.rows(), m.cols());
    const std::size_t cap = std::min(caps.exhaustive, kMaxExhaustiveOrder);
    if (order > cap) {
        throw CapExceeded(std::string(what) + ": min(rows, cols) = " + std::to_string(order) +
                          " exceeds exhaustive cap " + std::to_string(cap));
    }
}

bool at_most_two_per_column(const IntMatrix& m) {
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (m.col_nonzeros(c) > 2) return false;
    return true;
}

bool at_most_two_per_row(const IntMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m.row_nonzeros(r) > 2) return false;
    return true;
}

}  // namespace

Certificate is_tu(const IntMatrix& m, const OracleCaps& caps) {
    check_caps(m, caps, "is_tu");
    auto scan = detail::scan_minors(m, std::nullopt, /*parallel=*/true);
    Certificate cert;
    cert.property = Property::tu;
    cert.holds = !scan.best.has_value();
    cert.witness = std::move(scan.best);
    cert.stats.subdeterminants = scan.evaluated;
    return cert;
}

Certificate is_su(const IntMatrix& m, const OracleCaps& caps) {
    check_caps(m, caps, "is_su");
    Certificate cert = is_tu(m, caps);
    cert.property = Property::su;
    if (!cert.holds) return cert;
    if (at_most_two_per_column(m) || at_most_two_per_row(m)) {
        cert.stats.fast_path = true;
        return cert;
    }

    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) entries.emplace_back(r, c);

    std::vector<detail::ScanResult> parts(entries.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long k = 0; k < static_cast<long>(entries.size()); ++k) {
        const auto [r, c] = entries[static_cast<std::size_t>(k)];
        parts[static_cast<std::size_t>(k)] = detail::scan_minors(zeroed(m, r, c), std::pair{r, c}, false);
    }

    std::optional<Witness> best;
    for (auto& p : parts) {
        cert.stats.subdeterminants += p.evaluated;
        if (p.best && (!best || witness_preferred(*p.best, *best))) best = std::move(p.best);
    }
    cert.stats.zeroings = entries.size();
    cert.holds = !best.has_value();
    cert.witness = std::move(best);
    return cert;
}

namespace {

// Backtracking search for a +-1 signing of `rows` keeping every column sum in
// {-1, 0, 1}. `remaining[c]` counts nonzeros of column c in rows not yet signed.
bool signable(const IntMatrix& m, const std::vector<std::size_t>& rows, std::size_t k, std::vector<Entry>& sums,
              std::vector<int>& remaining) {
    if (k == rows.size()) return true;
    const auto row = m.row(rows[k]);
    for (std::size_t c = 0; c < m.cols(); ++c) remaining[c] -= row[c] != 0;
    bool ok = false;
    for (int s : {1, -1}) {
        // The first row's sign is free: negating a valid signing keeps it valid.
        if (k == 0 && s == -1) break;
        bool feasible = true;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            sums[c] += s * row[c];
            if (std::abs(sums[c]) - remaining[c] > 1) feasible = false;
        }
        if (feasible && signable(m, rows, k + 1, sums, remaining)) ok = true;
        for (std::size_t c = 0; c < m.cols(); ++c) sums[c] -= s * row[c];
        if (ok) break;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) remaining[c] += row[c] != 0;
    return ok;
}

}  // namespace

bool ghouila_houri_tu(const IntMatrix& m, const OracleCaps& caps) {
    require_signed_unit(m, "ghouila_houri_tu");
    const std::size_t cap = std::min<std::size_t>(caps.signing_rows, 24);
    if (m.rows() > cap) {
        throw CapExceeded("ghouila_houri_tu: " + std::to_string(m.rows()) + " rows exceed cap " +
                          std::to_string(cap));
    }
    const std::uint64_t subsets = std::uint64_t{1} << m.rows();
    std::vector<Entry> sums(m.cols(), 0);
    std::vector<int> remaining(m.cols(), 0);
    std::vector<std::size_t> rows;
    for (std::uint64_t s = 1; s < subsets; ++s) {
        rows.clear();
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (s >> r & 1) rows.push_back(r);
        std::fill(remaining.begin(), remaining.end(), 0);
        for (auto r : rows)
            for (std::size_t c = 0; c < m.cols(); ++c) remaining[c] += m(r, c) != 0;
        if (!signable(m, rows, 0, sums, remaining)) return false;
    }
    return true;
}

std::optional<bool> two_nonzero_su_rule(const IntMatrix& m, const OracleCaps& caps) {
    if (!at_most_two_per_column(m) && !at_most_two_per_row(m)) return std::nullopt;
    return is_tu(m, caps).holds;
}

Entry replay(const IntMatrix& m, const Witness& w) {
    IntMatrix src = m;
    if (w.zeroed_entry) src = zeroed(m, w.zeroed_entry->first, w.zeroed_entry->second);
    return det(submatrix(src, w.rows, w.cols));
}

bool witness_replays(const IntMatrix& m, const Witness& w) {
    if (w.rows.size() != w.cols.size() || w.rows.empty()) return false;
    if (!std::is_sorted(w.rows.begin(), w.rows.end()) || !std::is_sorted(w.cols.begin(), w.cols.end())) return false;
    if (std::adjacent_find(w.rows.begin(), w.rows.end()) != w.rows.end()) return false;
    if (std::adjacent_find(w.cols.begin(), w.cols.end()) != w.cols.end()) return false;
    if (w.rows.back() >= m.rows() || w.cols.back() >= m.cols()) return false;
    if (w.zeroed_entry) {
        const auto [r, c] = *w.zeroed_entry;
        if (r >= m.rows() || c >= m.cols() || m(r, c) == 0) return false;
    }
    if (w.determinant > -2 && w.determinant < 2) return false;
    return replay(m, w) == w.determinant;
}

}  // namespace sumod
