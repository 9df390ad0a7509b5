#ifndef SUMOD_MATROID_HPP
#define SUMOD_MATROID_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumod/int_matrix.hpp"

namespace sumod {

/// Matroid elements: 0..m-1 are the basis (row) elements, m..m+n-1 the
/// cobasis (column) elements. Wire labels are "r<i>" and "c<j>".
using ElementSet = std::vector<std::size_t>;

/*
 * A split of the ground set of the matroid of [I | N] written in matrix
 * coordinates: side X = row_split.first + col_split.first, side Y = the rest.
 * Its connectivity is lambda(X) = rank(N[R1, C2]) + rank(N[R2, C1]) over GF(2).
 */
struct Separation {
    std::pair<IndexSet, IndexSet> row_split;
    std::pair<IndexSet, IndexSet> col_split;
    int order = 1;
    std::size_t cross_rank_top_right = 0;    ///< rank of N[R1, C2]
    std::size_t cross_rank_bottom_left = 0;  ///< rank of N[R2, C1]

    std::size_t left_size() const { return row_split.first.size() + col_split.first.size(); }
    std::size_t right_size() const { return row_split.second.size() + col_split.second.size(); }

    friend bool operator==(const Separation&, const Separation&) = default;
};

/// Default ground-set cap for exhaustive separation searches.
inline constexpr std::size_t kSeparationCap = 18;

class ReprMatroid {
public:
    /// Requires rows(N) <= 64; entries are read mod 2.
    explicit ReprMatroid(IntMatrix base);

    const IntMatrix& base() const noexcept { return base_; }
    std::size_t ground_size() const noexcept { return base_.rows() + base_.cols(); }
    std::size_t basis_size() const noexcept { return base_.rows(); }

    std::size_t rank_of(const ElementSet& x) const;
    /// Rank of the element set encoded as a bitmask (ground size <= 64).
    std::size_t rank_of_mask(std::uint64_t x) const;

    /// Connectivity function r(X) + r(E - X) - r(E); requires X nonempty and proper.
    std::size_t lambda(const ElementSet& x) const;

    std::string label(std::size_t element) const;
    std::size_t element(std::string_view label) const;

    /// The column of [I | N] for `element`, as a bitmask over the rows.
    std::uint64_t vector_of(std::size_t element) const { return vectors_.at(element); }

private:
    IntMatrix base_;
    std::vector<std::uint64_t> vectors_;
};

/// Converts between element ids and matrix coordinates.
ElementSet elements_of(const ReprMatroid& m, const IndexSet& rows, const IndexSet& cols);
Separation separation_of(const ReprMatroid& m, const ElementSet& x);

/*
 * All splits of order 1 (lambda = 0, both sides nonempty) or of order 2
 * (lambda = 1, both sides with at least two elements), with the side holding
 * element 0 reported first. Sorted by (row_split.first, col_split.first).
 * Throws CapExceeded when the ground set exceeds `cap`.
 */
std::vector<Separation> separations_of_order(const IntMatrix& n, int order, std::size_t cap = kSeparationCap);

struct ConnectivityReport {
    bool connected = true;
    std::optional<Separation> separation;  ///< smallest obstruction when !connected
};

/// k in {2, 3}: true iff no j-separation exists for j < k.
ConnectivityReport is_k_connected(const ReprMatroid& m, int k, std::size_t cap = kSeparationCap);

/// Minimal dependent sets sorted by (size, lexicographic). Ground size <= 12.
std::vector<ElementSet> circuits(const ReprMatroid& m, std::size_t cap = 12);

/// Multiset of circuit sizes as counts indexed by size.
std::vector<std::size_t> circuit_size_profile(const ReprMatroid& m);

/// True iff N is 5x5 and the binary matroid of [I | N] is isomorphic to R10.
bool is_r10(const IntMatrix& n);

namespace reference {

/// Serial enumeration evaluating lambda through rank_of; baseline for the kernel.
std::vector<Separation> separations_of_order(const IntMatrix& n, int order, std::size_t cap = kSeparationCap);

}  // namespace reference

}  // namespace sumod

#endif
