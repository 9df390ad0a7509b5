#include "sumod/int_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "sumod/errors.hpp"

namespace sumod {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Entry fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionError("IntMatrix: entry count " + std::to_string(data_.size()) +
                             " does not match " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("IntMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Entry IntMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw IndexError("IntMatrix::at(" + std::to_string(r) + "," + std::to_string(c) +
                         ") out of range");
    }
    return (*this)(r, c);
}

bool IntMatrix::signed_unit() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Entry v) { return v >= -1 && v <= 1; });
}

std::size_t IntMatrix::nonzeros() const noexcept {
    return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](Entry v) { return v != 0; }));
}

std::size_t IntMatrix::row_nonzeros(std::size_t r) const noexcept {
    auto rr = row(r);
    return static_cast<std::size_t>(std::count_if(rr.begin(), rr.end(), [](Entry v) { return v != 0; }));
}

std::size_t IntMatrix::col_nonzeros(std::size_t c) const noexcept {
    std::size_t k = 0;
    for (std::size_t r = 0; r < rows_; ++r) k += (*this)(r, c) != 0;
    return k;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void require_signed_unit(const IntMatrix& m, const char* what) {
    if (!m.signed_unit()) {
        throw InvalidArgument(std::string(what) + ": matrix entries must lie in {-1,0,1}");
    }
}

void require_indices(const IndexSet& idx, std::size_t bound, const char* what) {
    std::vector<bool> seen(bound, false);
    for (auto i : idx) {
        if (i >= bound) {
            throw IndexError(std::string(what) + ": index " + std::to_string(i) +
                             " out of range (bound " + std::to_string(bound) + ")");
        }
        if (seen[i]) throw IndexError(std::string(what) + ": repeated index " + std::to_string(i));
        seen[i] = true;
    }
}

IndexSet iota_set(std::size_t n) {
    IndexSet s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = i;
    return s;
}

namespace {

std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

long long to_integer(const std::string& tok) {
    long long v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw ParseError("matrix text: bad integer '" + tok + "'");
    return v;
}

}  // namespace

IntMatrix read_matrix(std::istream& in) {
    const auto tokens = tokenize(in);
    if (tokens.size() < 2) throw ParseError("matrix text: missing 'rows cols' header");
    const long long m = to_integer(tokens[0]);
    const long long n = to_integer(tokens[1]);
    if (m < 0 || n < 0) throw ParseError("matrix text: negative dimension");
    const auto expected = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
    if (tokens.size() - 2 != expected) {
        throw ParseError("matrix text: expected " + std::to_string(expected) + " entries, found " +
                         std::to_string(tokens.size() - 2));
    }
    std::vector<Entry> data;
    data.reserve(expected);
    for (std::size_t i = 2; i < tokens.size(); ++i) data.push_back(to_integer(tokens[i]));
    return IntMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n), std::move(data));
}

IntMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << m(r, c);
        }
        out << '\n';
    }
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

std::ostream& operator<<(std::ostream& out, const IntMatrix& m) {
    write_matrix(out, m);
    return out;
}

}  // namespace sumod
