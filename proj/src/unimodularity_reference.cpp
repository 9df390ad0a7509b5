// Serial brute-force oracles kept as the baseline for the parallel kernels.

#include <algorithm>
#include <string>

#include "sumod/errors.hpp"
#include "sumod/exactmat.hpp"
#include "sumod/unimodularity.hpp"

namespace sumod::reference {

namespace {

// Advances `idx` to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(IndexSet& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

Certificate scan(const IntMatrix& m, std::optional<std::pair<std::size_t, std::size_t>> zero) {
    Certificate cert;
    const IntMatrix src = zero ? zeroed(m, zero->first, zero->second) : m;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()) && cert.holds; ++k) {
        IndexSet rows = iota_set(k);
        do {
            if (zero && !std::binary_search(rows.begin(), rows.end(), zero->first)) continue;
            IndexSet cols = iota_set(k);
            do {
                if (zero && !std::binary_search(cols.begin(), cols.end(), zero->second)) continue;
                const Entry d = det(submatrix(src, rows, cols));
                ++cert.stats.subdeterminants;
                if (d >= 2 || d <= -2) {
                    Witness w{rows, cols, zero, d};
                    if (!cert.witness || witness_preferred(w, *cert.witness)) cert.witness = std::move(w);
                    cert.holds = false;
                }
            } while (next_combination(cols, m.cols()));
        } while (next_combination(rows, m.rows()));
    }
    return cert;
}

void check_caps(const IntMatrix& m, const OracleCaps& caps, const char* what) {
    require_signed_unit(m, what);
    const std::size_t order = std::min(m.rows(), m.cols());
    const std::size_t cap = std::min(caps.exhaustive, kMaxExhaustiveOrder);
    if (order > cap) {
        throw CapExceeded(std::string(what) + ": min(rows, cols) exceeds exhaustive cap " + std::to_string(cap));
    }
}

}  // namespace

Certificate is_tu(const IntMatrix& m, const OracleCaps& caps) {
    check_caps(m, caps, "reference::is_tu");
    Certificate cert = scan(m, std::nullopt);
    cert.property = Property::tu;
    return cert;
}

Certificate is_su(const IntMatrix& m, const OracleCaps& caps) {
    check_caps(m, caps, "reference::is_su");
    Certificate cert = scan(m, std::nullopt);
    cert.property = Property::su;
    if (!cert.holds) return cert;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c) == 0) continue;
            Certificate part = scan(m, std::pair{r, c});
            cert.stats.subdeterminants += part.stats.subdeterminants;
            ++cert.stats.zeroings;
            if (part.witness && (!cert.witness || witness_preferred(*part.witness, *cert.witness))) {
                cert.witness = std::move(part.witness);
            }
        }
    }
    cert.holds = !cert.witness.has_value();
    return cert;
}

}  // namespace sumod::reference
