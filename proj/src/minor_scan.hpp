#ifndef SUMOD_SRC_MINOR_SCAN_HPP
#define SUMOD_SRC_MINOR_SCAN_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "sumod/int_matrix.hpp"
#include "sumod/unimodularity.hpp"

namespace sumod::detail {

struct ScanResult {
    std::optional<Witness> best;  ///< preferred minor with |det| >= 2, if any
    std::uint64_t evaluated = 0;
};

/*
 * Exhaustive minor scan of a {0,+1,-1} matrix. When `through` is set only
 * minors using that row and that column are reported (rows not containing it
 * are still pruned early). `parallel` splits the work over the first row of
 * each row prefix with OpenMP.
 */
ScanResult scan_minors(const IntMatrix& m, std::optional<std::pair<std::size_t, std::size_t>> through,
                       bool parallel);

}  // namespace sumod::detail

#endif
