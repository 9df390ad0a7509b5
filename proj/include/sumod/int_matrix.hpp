#ifndef SUMOD_INT_MATRIX_HPP
#define SUMOD_INT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sumod {

using Entry = std::int64_t;

/// 0-based row or column indices. Operations that return index sets always
/// return them strictly increasing.
using IndexSet = std::vector<std::size_t>;

/*
 * Dense row-major matrix of signed integers.
 *
 * Every matrix handled by the unimodularity oracles is a {0,+1,-1} matrix
 * ("signed unit"); the kernel itself allows arbitrary 64-bit entries so that
 * pivots and compositions of non-TU inputs can be represented faithfully.
 * Zero-sized matrices (0 x n, m x 0) are valid values.
 */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, Entry fill = 0);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);
    IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Entry operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Entry& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    /// Bounds-checked access; throws IndexError.
    Entry at(std::size_t r, std::size_t c) const;

    std::span<const Entry> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<const Entry> entries() const noexcept { return data_; }

    /// True iff every entry lies in {-1, 0, +1}.
    bool signed_unit() const noexcept;

    std::size_t nonzeros() const noexcept;
    std::size_t row_nonzeros(std::size_t r) const noexcept;
    std::size_t col_nonzeros(std::size_t c) const noexcept;

    IntMatrix transposed() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Entry> data_;
};

/// Throws InvalidArgument unless `m` is a {0,+1,-1} matrix.
void require_signed_unit(const IntMatrix& m, const char* what);

/// Throws IndexError unless every index is < bound and indices are distinct.
void require_indices(const IndexSet& idx, std::size_t bound, const char* what);

/// {0, 1, ..., n-1}.
IndexSet iota_set(std::size_t n);

/// Matrix text format: `m n` on the first line, then m lines of n integers.
/// The reader skips blank lines and `#` comments and tolerates any whitespace.
IntMatrix read_matrix(std::istream& in);
IntMatrix parse_matrix(const std::string& text);
void write_matrix(std::ostream& out, const IntMatrix& m);
std::string format_matrix(const IntMatrix& m);

std::ostream& operator<<(std::ostream& out, const IntMatrix& m);

}  // namespace sumod

#endif
