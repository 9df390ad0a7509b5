#ifndef SUMOD_UNIMODULARITY_HPP
#define SUMOD_UNIMODULARITY_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "sumod/int_matrix.hpp"

namespace sumod {

enum class Property { tu, su };

const char* to_string(Property p);

/*
 * Replayable evidence that a matrix is not TU (or not SU): the submatrix on
 * `rows` x `cols` (both strictly increasing, 0-based), taken after zeroing
 * `zeroed_entry` if present, has determinant `determinant` with |det| >= 2.
 */
struct Witness {
    IndexSet rows;
    IndexSet cols;
    std::optional<std::pair<std::size_t, std::size_t>> zeroed_entry;
    Entry determinant = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct CertificateStats {
    std::uint64_t subdeterminants = 0;  ///< square minors evaluated
    std::uint64_t zeroings = 0;         ///< nonzero entries zeroed and re-examined
    bool fast_path = false;             ///< SU settled by the two-nonzero rule
};

struct Certificate {
    Property property = Property::tu;
    bool holds = true;
    std::optional<Witness> witness;  ///< present iff !holds
    CertificateStats stats;
};

/// Size limits of the exhaustive oracles. Exceeding one raises CapExceeded.
struct OracleCaps {
    std::size_t exhaustive = 8;     ///< max of min(rows, cols) for is_tu / is_su
    std::size_t signing_rows = 16;  ///< max rows for ghouila_houri_tu
};

/// Hard ceiling on OracleCaps::exhaustive.
inline constexpr std::size_t kMaxExhaustiveOrder = 16;

/*
 * Witness order used to pick a canonical witness among equally small ones:
 * smaller submatrices win; among equal sizes the bottom-right-most one wins,
 * i.e. the lexicographically greatest (rows, cols, zeroed_entry).
 * Returns true if `a` is preferred over `b`.
 */
bool witness_preferred(const Witness& a, const Witness& b);

/*
 * Total unimodularity by exhaustive subdeterminant enumeration.
 *
 * Minors are computed by a row-prefix dynamic program over column subsets
 * (Laplace expansion along the newest row), parallelized over the first row
 * of the prefix. The returned certificate does not depend on the thread count.
 */
Certificate is_tu(const IntMatrix& m, const OracleCaps& caps = {});

/*
 * Strong unimodularity: TU, and TU after zeroing any single nonzero.
 * After zeroing (r, c) only minors through row r and column c are re-examined.
 * A TU matrix with at most two nonzeros in every column (or every row) is
 * accepted without enumerating zeroings.
 */
Certificate is_su(const IntMatrix& m, const OracleCaps& caps = {});

inline Certificate check(Property p, const IntMatrix& m, const OracleCaps& caps = {}) {
    return p == Property::tu ? is_tu(m, caps) : is_su(m, caps);
}

/// Every subset of rows admits a +-1 signing with all column sums in {-1,0,1}.
bool ghouila_houri_tu(const IntMatrix& m, const OracleCaps& caps = {});

/// true/false when M has <= 2 nonzeros per column or per row (then SU <=> TU),
/// nullopt when that structural hypothesis fails.
std::optional<bool> two_nonzero_su_rule(const IntMatrix& m, const OracleCaps& caps = {});

/// Determinant of the witness submatrix of `m`, after the optional zeroing.
Entry replay(const IntMatrix& m, const Witness& w);

/// replay(m, w) == w.determinant, |det| >= 2, indices valid and increasing, and
/// the zeroed entry (if any) is nonzero in `m`.
bool witness_replays(const IntMatrix& m, const Witness& w);

namespace reference {

/// Serial brute force: every square submatrix in (size, lexicographic) order,
/// each determinant by Bareiss elimination. Same contract as sumod::is_tu.
Certificate is_tu(const IntMatrix& m, const OracleCaps& caps = {});

/// Serial brute force over every zeroing, without the two-nonzero fast path.
Certificate is_su(const IntMatrix& m, const OracleCaps& caps = {});

}  // namespace reference

}  // namespace sumod

#endif
