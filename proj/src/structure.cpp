#include "sumod/structure.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "sumod/errors.hpp"
#include "sumod/exactmat.hpp"
#include "sumod/matroid.hpp"

namespace sumod {

namespace {

// Vertex ids: rows 0..m-1, columns m..m+n-1.
class Adjacency {
public:
    explicit Adjacency(std::size_t rows, std::size_t cols) : rows_(rows), adj_(rows + cols) {}

    void add(std::size_t r, std::size_t c) {
        adj_[r].push_back(rows_ + c);
        adj_[rows_ + c].push_back(r);
    }

    const std::vector<std::size_t>& operator[](std::size_t v) const { return adj_[v]; }
    std::size_t size() const { return adj_.size(); }
    std::size_t rows() const { return rows_; }

    BipVertex vertex(std::size_t v) const {
        return v < rows_ ? BipVertex{BipVertex::Side::row, v} : BipVertex{BipVertex::Side::col, v - rows_};
    }

private:
    std::size_t rows_;
    std::vector<std::vector<std::size_t>> adj_;
};

std::size_t count_components(const Adjacency& g, const std::vector<bool>& present) {
    std::vector<bool> seen(g.size(), false);
    std::size_t count = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (!present[s] || seen[s]) continue;
        ++count;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : g[v]) {
                if (present[w] && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return count;
}

bool contains(const IndexSet& s, std::size_t x) { return std::find(s.begin(), s.end(), x) != s.end(); }

Witness make_witness(const IntMatrix& n, IndexSet rows, IndexSet cols,
                     std::optional<std::pair<std::size_t, std::size_t>> zero) {
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    Witness w;
    w.determinant = det(zero ? submatrix(zeroed(n, zero->first, zero->second), rows, cols) : submatrix(n, rows, cols));
    w.rows = std::move(rows);
    w.cols = std::move(cols);
    w.zeroed_entry = zero;
    return w;
}

// 2x2 witness on rows {ra, rb} and cols {ca, cb}; nullopt when the determinant vanishes.
std::optional<Witness> two_by_two(const IntMatrix& n, std::size_t ra, std::size_t rb, std::size_t ca,
                                  std::size_t cb) {
    Entry d = n(ra, ca) * n(rb, cb) - n(ra, cb) * n(rb, ca);
    if (std::abs(d) < 2) return std::nullopt;
    return make_witness(n, {ra, rb}, {ca, cb}, std::nullopt);
}

void require_partition(const RowPartition& p, std::size_t size, const char* what) {
    std::vector<bool> seen(size, false);
    std::size_t covered = 0;
    for (const auto& part : p) {
        if (part.empty()) throw InvalidArgument(std::string(what) + ": empty part");
        for (auto i : part) {
            if (i >= size) throw InvalidArgument(std::string(what) + ": index " + std::to_string(i) + " out of range");
            if (seen[i]) throw InvalidArgument(std::string(what) + ": index " + std::to_string(i) + " repeated");
            seen[i] = true;
            ++covered;
        }
    }
    if (covered != size) throw InvalidArgument(std::string(what) + ": does not cover every index");
}

class PartitionSearch {
public:
    PartitionSearch(const IntMatrix& a, std::size_t k)
        : a_(a), k_(k), label_(a.rows(), 0), count_(a.cols() * k, 0), part_size_(k, 0), remaining_(a.cols(), 0) {
        for (std::size_t c = 0; c < a.cols(); ++c) remaining_[c] = a.col_nonzeros(c);
    }

    std::optional<std::vector<std::size_t>> run() {
        if (dfs(0)) return label_;
        return std::nullopt;
    }

private:
    std::size_t& count(std::size_t c, std::size_t part) { return count_[c * k_ + part]; }

    // Parts before the last occupied one that hold exactly one nonzero need
    // another one from the rows still unassigned.
    bool column_feasible(std::size_t c) {
        std::size_t last = k_;
        for (std::size_t i = k_; i-- > 0;) {
            if (count(c, i) > 0) {
                last = i;
                break;
            }
        }
        if (last == k_) return true;
        std::size_t deficient = 0;
        for (std::size_t i = 0; i < last; ++i) deficient += count(c, i) == 1 ? 1 : 0;
        return deficient <= remaining_[c];
    }

    bool dfs(std::size_t row) {
        const std::size_t m = a_.rows();
        if (row == m) return true;
        std::size_t empty = 0;
        for (auto s : part_size_) empty += s == 0 ? 1 : 0;
        for (std::size_t part = 0; part < k_; ++part) {
            // Every part must end up nonempty.
            std::size_t empty_after = empty - (part_size_[part] == 0 ? 1 : 0);
            if (empty_after > m - row - 1) continue;
            if (assign(row, part)) {
                if (dfs(row + 1)) return true;
            }
            unassign(row, part);
        }
        return false;
    }

    bool assign(std::size_t row, std::size_t part) {
        label_[row] = part;
        ++part_size_[part];
        bool ok = true;
        for (std::size_t c = 0; c < a_.cols(); ++c) {
            if (a_(row, c) == 0) continue;
            --remaining_[c];
            if (++count(c, part) > 2) ok = false;
        }
        if (!ok) return false;
        for (std::size_t c = 0; c < a_.cols(); ++c) {
            if (a_(row, c) != 0 && !column_feasible(c)) return false;
        }
        return true;
    }

    void unassign(std::size_t row, std::size_t part) {
        --part_size_[part];
        for (std::size_t c = 0; c < a_.cols(); ++c) {
            if (a_(row, c) == 0) continue;
            ++remaining_[c];
            --count(c, part);
        }
    }

    const IntMatrix& a_;
    std::size_t k_;
    std::vector<std::size_t> label_;
    std::vector<std::size_t> count_;
    std::vector<std::size_t> part_size_;
    std::vector<std::size_t> remaining_;
};

std::size_t nonzeros_in(const IntMatrix& a, const IndexSet& rows, std::size_t c) {
    std::size_t k = 0;
    for (auto r : rows) k += a(r, c) != 0 ? 1 : 0;
    return k;
}

std::size_t nonzeros_along(const IntMatrix& a, std::size_t r, const IndexSet& cols) {
    std::size_t k = 0;
    for (auto c : cols) k += a(r, c) != 0 ? 1 : 0;
    return k;
}

}  // namespace

std::size_t BipGraph::component_count() const {
    Adjacency g(rows, cols);
    for (auto [r, c] : edges) g.add(r, c);
    return count_components(g, std::vector<bool>(rows + cols, true));
}

BipGraph bipartite_graph(const IntMatrix& n) {
    BipGraph g{n.rows(), n.cols(), {}};
    for (std::size_t r = 0; r < n.rows(); ++r)
        for (std::size_t c = 0; c < n.cols(); ++c)
            if (n(r, c) != 0) g.edges.emplace_back(r, c);
    return g;
}

std::optional<DenseBlock> find_dense_block(const IntMatrix& n) {
    require_signed_unit(n, "find_dense_block");
    const std::size_t m = n.rows(), k = n.cols();
    for (std::size_t r1 = 0; r1 < m; ++r1) {
        for (std::size_t r2 = r1 + 1; r2 < m; ++r2) {
            for (std::size_t c1 = 0; c1 < k; ++c1) {
                for (std::size_t c2 = c1 + 1; c2 < k; ++c2) {
                    if (n(r1, c1) == 0 || n(r1, c2) == 0 || n(r2, c1) == 0 || n(r2, c2) == 0) continue;
                    if (n(r1, c1) * n(r2, c2) != n(r1, c2) * n(r2, c1)) continue;

                    // Signs relative to row r1: col_sign(c) = N(r1, c), row_sign(r) = N(r, c1) * N(r1, c1).
                    DenseBlock d;
                    std::vector<int> row_sign(m, 0), col_sign(k, 0);
                    std::vector<bool> in_row(m, false), in_col(k, false);
                    in_row[r1] = in_row[r2] = true;
                    in_col[c1] = in_col[c2] = true;
                    col_sign[c1] = static_cast<int>(n(r1, c1));
                    col_sign[c2] = static_cast<int>(n(r1, c2));
                    row_sign[r1] = 1;
                    row_sign[r2] = static_cast<int>(n(r2, c1) * col_sign[c1]);

                    bool changed = true;
                    while (changed) {
                        changed = false;
                        for (std::size_t r = 0; r < m; ++r) {
                            if (in_row[r] || n(r, c1) == 0) continue;
                            int s = static_cast<int>(n(r, c1)) * col_sign[c1];
                            bool ok = true;
                            for (std::size_t c = 0; c < k && ok; ++c)
                                if (in_col[c]) ok = s * col_sign[c] * n(r, c) == 1;
                            if (ok) {
                                in_row[r] = true;
                                row_sign[r] = s;
                                changed = true;
                            }
                        }
                        for (std::size_t c = 0; c < k; ++c) {
                            if (in_col[c] || n(r1, c) == 0) continue;
                            int s = static_cast<int>(n(r1, c));
                            bool ok = true;
                            for (std::size_t r = 0; r < m && ok; ++r)
                                if (in_row[r]) ok = row_sign[r] * s * n(r, c) == 1;
                            if (ok) {
                                in_col[c] = true;
                                col_sign[c] = s;
                                changed = true;
                            }
                        }
                    }
                    for (std::size_t r = 0; r < m; ++r) {
                        if (!in_row[r]) continue;
                        d.rows.push_back(r);
                        d.row_signs.push_back(row_sign[r]);
                    }
                    for (std::size_t c = 0; c < k; ++c) {
                        if (!in_col[c]) continue;
                        d.cols.push_back(c);
                        d.col_signs.push_back(col_sign[c]);
                    }
                    return d;
                }
            }
        }
    }
    return std::nullopt;
}

DenseBlockWitness witness_from_dense_block(const IntMatrix& n, const DenseBlock& block, bool check_connectivity) {
    require_signed_unit(n, "witness_from_dense_block");
    require_indices(block.rows, n.rows(), "dense block rows");
    require_indices(block.cols, n.cols(), "dense block cols");
    if (block.rows.size() < 2 || block.cols.size() < 2)
        throw InvalidArgument("witness_from_dense_block: block must be at least 2x2");
    for (auto r : block.rows)
        for (auto c : block.cols)
            if (n(r, c) == 0) throw InvalidArgument("witness_from_dense_block: block has a zero entry");
    if (rank(submatrix(n, block.rows, block.cols)) != 1)
        throw InvalidArgument("witness_from_dense_block: block is not rank 1");
    if (check_connectivity && !is_k_connected(ReprMatroid(n), 3).connected)
        throw InvalidArgument("witness_from_dense_block: matroid is not 3-connected");

    const std::size_t m = n.rows();
    Adjacency f(m, n.cols());
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n.cols(); ++c)
            if (n(r, c) != 0 && !(contains(block.rows, r) && contains(block.cols, c))) f.add(r, c);

    // Shortest R-S path; ties by start row, then end column.
    constexpr auto kInf = std::numeric_limits<std::size_t>::max();
    std::size_t best_len = kInf;
    std::vector<std::size_t> best_path;
    for (auto r : block.rows) {
        std::vector<std::size_t> dist(f.size(), kInf), parent(f.size(), kInf);
        std::queue<std::size_t> q;
        dist[r] = 0;
        q.push(r);
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            for (auto w : f[v]) {
                if (dist[w] != kInf) continue;
                dist[w] = dist[v] + 1;
                parent[w] = v;
                q.push(w);
            }
        }
        for (auto s : block.cols) {
            auto v = m + s;
            if (dist[v] >= best_len) continue;
            best_len = dist[v];
            best_path.clear();
            for (auto x = v; x != kInf; x = parent[x]) best_path.push_back(x);
            std::reverse(best_path.begin(), best_path.end());
        }
    }
    if (best_len == kInf) throw InvalidArgument("witness_from_dense_block: no path between block rows and columns");
    assert(best_len % 2 == 1 && best_len >= 3);

    DenseBlockWitness out;
    for (auto v : best_path) out.path.push_back(f.vertex(v));

    // path = r2, q1, p_n, q2, ..., q_n, p_1, s2
    const std::size_t r2 = best_path.front();
    const std::size_t s2 = best_path.back() - m;
    const std::size_t q1 = best_path[1] - m;
    const std::size_t p1 = best_path[best_path.size() - 2];

    std::optional<std::size_t> r1, s1;
    for (auto r : block.rows) {
        if (r != r2 && n(r, q1) == 0) {
            r1 = r;
            break;
        }
    }
    if (!r1) {
        // q1 meets every block row but was not absorbed, so it is not proportional.
        for (auto r : block.rows) {
            if (r == r2) continue;
            if (auto w = two_by_two(n, r2, r, q1, block.cols.front())) {
                out.witness = *w;
                return out;
            }
        }
        throw Error("witness_from_dense_block: inconsistent dense block");
    }
    for (auto s : block.cols) {
        if (s != s2 && n(p1, s) == 0) {
            s1 = s;
            break;
        }
    }
    if (!s1) {
        for (auto s : block.cols) {
            if (s == s2) continue;
            if (auto w = two_by_two(n, block.rows.front(), p1, s2, s)) {
                out.witness = *w;
                return out;
            }
        }
        throw Error("witness_from_dense_block: inconsistent dense block");
    }

    out.path_rows.push_back(r2);
    for (std::size_t i = 2; i + 1 < best_path.size(); i += 2) out.path_rows.push_back(best_path[i]);
    out.path_rows.push_back(*r1);
    for (std::size_t i = 1; i + 1 < best_path.size(); i += 2) out.path_cols.push_back(best_path[i] - m);
    out.path_cols.push_back(s2);
    out.path_cols.push_back(*s1);

    Witness plain = make_witness(n, out.path_rows, out.path_cols, std::nullopt);
    if (std::abs(plain.determinant) >= 2) {
        out.witness = plain;
        return out;
    }
    IndexSet first_row_cols = out.path_cols;
    std::sort(first_row_cols.begin(), first_row_cols.end());
    for (auto c : first_row_cols) {
        if (n(r2, c) == 0) continue;
        Witness w = make_witness(n, out.path_rows, out.path_cols, std::make_pair(r2, c));
        if (std::abs(w.determinant) >= 2) {
            out.witness = w;
            return out;
        }
    }
    throw Error("witness_from_dense_block: no first-row zeroing gives a non-TU submatrix");
}

std::optional<RowPartition> find_row_partition(const IntMatrix& a, std::size_t cap) {
    if (a.rows() > cap)
        throw CapExceeded("find_row_partition: " + std::to_string(a.rows()) + " rows exceed the cap of " +
                          std::to_string(cap));
    if (a.rows() == 0) return RowPartition{};
    for (std::size_t k = 1; k <= a.rows(); ++k) {
        if (auto labels = PartitionSearch(a, k).run()) {
            RowPartition p(k);
            for (std::size_t r = 0; r < a.rows(); ++r) p[(*labels)[r]].push_back(r);
            return p;
        }
    }
    return std::nullopt;
}

PartitionReport verify_row_partition(const IntMatrix& a, const RowPartition& p) {
    require_partition(p, a.rows(), "verify_row_partition");
    PartitionReport report;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        std::vector<std::size_t> counts;
        for (const auto& part : p) counts.push_back(nonzeros_in(a, part, c));
        for (std::size_t i = 0; i < p.size(); ++i) {
            int clause = 0;
            if (counts[i] > 2) {
                clause = 1;
            } else if (counts[i] == 1) {
                for (std::size_t j = i + 1; j < p.size(); ++j)
                    if (counts[j] > 0) clause = 2;
            }
            if (clause != 0) {
                report.verified = false;
                report.violation = PartitionViolation{c, i, clause};
                return report;
            }
        }
    }
    return report;
}

const char* to_string(BlockShape s) {
    switch (s) {
        case BlockShape::cycle: return "cycle";
        case BlockShape::not_cycle: return "not_cycle";
        case BlockShape::unchecked: return "unchecked";
    }
    return "?";
}

FinalStructureReport verify_final_structure(const IntMatrix& a, const RowPartition& s, const RowPartition& t) {
    require_partition(s, a.rows(), "verify_final_structure rows");
    require_partition(t, a.cols(), "verify_final_structure cols");
    FinalStructureReport rep;
    rep.row_partition_valid = verify_row_partition(a, s).verified;
    rep.col_partition_valid = verify_row_partition(a.transposed(), t).verified;

    auto zero_or_two = [](std::size_t k) { return k == 0 || k == 2; };
    if (!s.empty() && !t.empty()) {
        for (auto r : s[0]) rep.clause_i = rep.clause_i && zero_or_two(nonzeros_along(a, r, t[0]));
        for (auto c : t[0]) rep.clause_i = rep.clause_i && zero_or_two(nonzeros_in(a, s[0], c));
        for (const auto& cols : t)
            for (auto c : cols) rep.clause_ii = rep.clause_ii && zero_or_two(nonzeros_in(a, s[0], c));
        for (const auto& rows : s)
            for (auto r : rows) rep.clause_ii = rep.clause_ii && zero_or_two(nonzeros_along(a, r, t[0]));
    }

    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            BlockReport b{i, j, BlockShape::unchecked};
            bool regular = true;
            for (auto r : s[i]) regular = regular && nonzeros_along(a, r, t[j]) == 2;
            for (auto c : t[j]) regular = regular && nonzeros_in(a, s[i], c) == 2;
            if (regular) {
                IntMatrix blk = submatrix(a, s[i], t[j]);
                BipGraph g = bipartite_graph(blk);
                b.shape = g.component_count() == 1 ? BlockShape::cycle : BlockShape::not_cycle;
                if (b.shape == BlockShape::not_cycle) rep.clause_iii = false;
            }
            rep.blocks.push_back(b);
        }
    }
    return rep;
}

IntMatrix arrange(const IntMatrix& a, const RowPartition& s, const RowPartition& t) {
    require_partition(s, a.rows(), "arrange rows");
    require_partition(t, a.cols(), "arrange cols");
    IndexSet rows, cols;
    for (const auto& p : s) rows.insert(rows.end(), p.begin(), p.end());
    for (const auto& p : t) cols.insert(cols.end(), p.begin(), p.end());
    return submatrix(a, rows, cols);
}

std::string export_dot(const IntMatrix& n, const std::optional<DenseBlock>& block, const std::vector<BipVertex>& path) {
    std::ostringstream out;
    out << "graph BG {\n";
    for (std::size_t r = 0; r < n.rows(); ++r) out << "  r" << r << " [shape=circle];\n";
    for (std::size_t c = 0; c < n.cols(); ++c) out << "  c" << c << " [shape=box];\n";

    auto on_path = [&](std::size_t r, std::size_t c) {
        BipVertex rv{BipVertex::Side::row, r}, cv{BipVertex::Side::col, c};
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if ((path[i] == rv && path[i + 1] == cv) || (path[i] == cv && path[i + 1] == rv)) return true;
        }
        return false;
    };
    for (auto [r, c] : bipartite_graph(n).edges) {
        out << "  r" << r << " -- c" << c << " [label=\"" << n(r, c) << "\"";
        if (block && contains(block->rows, r) && contains(block->cols, c)) out << ", style=bold";
        if (on_path(r, c)) out << ", color=red, penwidth=2";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace sumod
