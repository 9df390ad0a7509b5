#include "sumod/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "sumod/errors.hpp"
#include "sumod/exactmat.hpp"
#include "sumod/ksum.hpp"
#include "sumod/unimodularity.hpp"

namespace sumod {

IntMatrix classic_matrix(Classic which) {
    switch (which) {
        case Classic::B1:
            return {{1, 0, 0, 1, -1},  //
                    {-1, 1, 0, 0, 1},
                    {1, -1, 1, 0, 0},
                    {0, 1, -1, 1, 0},
                    {0, 0, 1, -1, 1}};
        case Classic::B2:
            return {{1, 1, 1, 1, 1},  //
                    {1, 1, 1, 0, 0},
                    {1, 0, 1, 1, 0},
                    {1, 0, 0, 1, 1},
                    {1, 1, 0, 0, 1}};
        case Classic::N1:
            return {{1, 0, 1},  //
                    {-1, 1, 0},
                    {0, 1, 1}};
        case Classic::N2:
            return {{1, 1, 0},  //
                    {0, 1, 1},
                    {1, 1, 1}};
    }
    throw InvalidArgument("classic_matrix: unknown matrix");
}

IntMatrix classic_matrix(std::string_view name) {
    std::string up(name);
    for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (up == "B1") return classic_matrix(Classic::B1);
    if (up == "B2") return classic_matrix(Classic::B2);
    if (up == "N1") return classic_matrix(Classic::N1);
    if (up == "N2") return classic_matrix(Classic::N2);
    throw InvalidArgument("classic_matrix: unknown name '" + std::string(name) + "'");
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

void require_digraph(const Digraph& g) {
    if (g.vertices == 0) throw InvalidArgument("digraph: needs at least one vertex");
    for (const auto& a : g.arcs) {
        if (a.tail >= g.vertices || a.head >= g.vertices) throw InvalidArgument("digraph: arc endpoint out of range");
        if (a.tail == a.head) throw InvalidArgument("digraph: self-loops are not supported");
    }
}

}  // namespace

void require_spanning_tree(const Digraph& g, const TreeSelection& tree) {
    require_digraph(g);
    if (tree.size() != g.vertices - 1) {
        throw InvalidArgument("tree: expected " + std::to_string(g.vertices - 1) + " arcs, got " +
                              std::to_string(tree.size()));
    }
    std::vector<bool> seen(g.arcs.size(), false);
    UnionFind uf(g.vertices);
    for (auto id : tree) {
        if (id >= g.arcs.size()) throw InvalidArgument("tree: arc id out of range");
        if (seen[id]) throw InvalidArgument("tree: repeated arc id");
        seen[id] = true;
        if (!uf.unite(g.arcs[id].tail, g.arcs[id].head)) throw InvalidArgument("tree: selection contains a cycle");
    }
}

IntMatrix network_matrix(const Digraph& g, const TreeSelection& tree) {
    require_spanning_tree(g, tree);
    TreeSelection rows = tree;
    std::sort(rows.begin(), rows.end());
    std::vector<std::size_t> row_of(g.arcs.size(), SIZE_MAX);
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
    std::vector<std::size_t> cols;
    for (std::size_t id = 0; id < g.arcs.size(); ++id)
        if (row_of[id] == SIZE_MAX) cols.push_back(id);

    // tree adjacency: (neighbour, arc id)
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertices);
    for (auto id : rows) {
        adj[g.arcs[id].tail].push_back({g.arcs[id].head, id});
        adj[g.arcs[id].head].push_back({g.arcs[id].tail, id});
    }

    IntMatrix out(rows.size(), cols.size());
    std::vector<std::size_t> parent(g.vertices), via(g.vertices);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Arc f = g.arcs[cols[j]];
        std::fill(parent.begin(), parent.end(), SIZE_MAX);
        parent[f.tail] = f.tail;
        std::vector<std::size_t> queue{f.tail};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            const std::size_t u = queue[q];
            for (auto [v, id] : adj[u]) {
                if (parent[v] != SIZE_MAX) continue;
                parent[v] = u;
                via[v] = id;
                queue.push_back(v);
            }
        }
        // walk back from head; arc via[y] is traversed parent[y] -> y
        for (std::size_t y = f.head; y != f.tail; y = parent[y]) {
            const Arc& e = g.arcs[via[y]];
            out(row_of[via[y]], j) = (e.tail == parent[y] && e.head == y) ? 1 : -1;
        }
    }
    return out;
}

std::vector<TreeSelection> spanning_trees(const Digraph& g) {
    require_digraph(g);
    std::vector<TreeSelection> trees;
    const std::size_t need = g.vertices - 1;
    TreeSelection pick;
    std::function<void(std::size_t, UnionFind)> rec = [&](std::size_t next, UnionFind uf) {
        if (pick.size() == need) {
            trees.push_back(pick);
            return;
        }
        for (std::size_t id = next; id < g.arcs.size(); ++id) {
            if (g.arcs.size() - id < need - pick.size()) break;
            UnionFind copy = uf;
            if (!copy.unite(g.arcs[id].tail, g.arcs[id].head)) continue;
            pick.push_back(id);
            rec(id + 1, copy);
            pick.pop_back();
        }
    };
    rec(0, UnionFind(g.vertices));
    return trees;
}

Digraph wheel_graph(std::size_t spokes) {
    if (spokes < 3) throw InvalidArgument("wheel_graph: needs at least 3 spokes");
    Digraph g{spokes + 1, {}};
    for (std::size_t i = 1; i <= spokes; ++i) g.arcs.push_back({0, i});
    for (std::size_t i = 1; i <= spokes; ++i) g.arcs.push_back({i, i % spokes + 1});
    return g;
}

TreeSelection wheel_star_tree(std::size_t spokes) { return iota_set(spokes); }

TreeSelection wheel_path_tree(std::size_t spokes) {
    TreeSelection t{0};
    for (std::size_t i = 0; i + 1 < spokes; ++i) t.push_back(spokes + i);
    return t;
}

const char* to_string(CorpusProfile p) {
    switch (p) {
        case CorpusProfile::su_small: return "su_small";
        case CorpusProfile::su_composed: return "su_composed";
        case CorpusProfile::non_su: return "non_su";
        case CorpusProfile::tu_random: return "tu_random";
    }
    return "?";
}

std::optional<CorpusProfile> corpus_profile_from_string(std::string_view name) {
    for (auto p : {CorpusProfile::su_small, CorpusProfile::su_composed, CorpusProfile::non_su,
                   CorpusProfile::tu_random}) {
        if (name == to_string(p)) return p;
    }
    return std::nullopt;
}

std::pair<Digraph, TreeSelection> random_network(CorpusRng& rng, std::size_t vertices, std::size_t extra) {
    if (vertices < 2) throw InvalidArgument("random_network: needs at least two vertices");
    Digraph g{vertices, {}};
    TreeSelection tree;
    for (std::size_t v = 1; v < vertices; ++v) {
        const std::size_t u = rng.below(v);
        tree.push_back(g.arcs.size());
        g.arcs.push_back(rng.coin() ? Arc{u, v} : Arc{v, u});
    }
    for (std::size_t k = 0; k < extra; ++k) {
        const std::size_t u = rng.below(vertices);
        std::size_t v = rng.below(vertices - 1);
        if (v >= u) ++v;
        g.arcs.push_back({u, v});
    }
    return {std::move(g), std::move(tree)};
}

namespace {

std::string describe_network(const Digraph& g, const TreeSelection& t) {
    std::ostringstream s;
    s << "network(vertices=" << g.vertices << ", arcs=[";
    for (std::size_t i = 0; i < g.arcs.size(); ++i) s << (i ? "," : "") << g.arcs[i].tail << ">" << g.arcs[i].head;
    s << "], tree=[";
    for (std::size_t i = 0; i < t.size(); ++i) s << (i ? "," : "") << t[i];
    s << "])";
    return s.str();
}

CorpusEntry random_network_entry(CorpusRng& rng, std::size_t max_dim) {
    const std::size_t vertices = rng.between(2, max_dim + 1);
    const std::size_t extra = rng.between(1, max_dim);
    auto [g, tree] = random_network(rng, vertices, extra);
    return {network_matrix(g, tree), describe_network(g, tree)};
}

CorpusEntry random_signed_embedding(CorpusRng& rng, IntMatrix base, const std::string& name) {
    std::ostringstream recipe;
    recipe << name;
    const std::size_t ops = rng.below(3);
    for (std::size_t k = 0; k < ops; ++k) {
        const auto kind = all_extend_kinds()[rng.below(all_extend_kinds().size())];
        std::size_t index = 0;
        if (kind == ExtendKind::unit_row || kind == ExtendKind::repeat_col) index = rng.below(base.cols());
        if (kind == ExtendKind::unit_col || kind == ExtendKind::repeat_row) index = rng.below(base.rows());
        base = extend(base, kind, index);
        recipe << " |> " << to_string(kind) << "(" << index << ")";
    }
    PermuteScale ps = PermuteScale::identity(base.rows(), base.cols());
    for (std::size_t i = base.rows(); i > 1; --i) std::swap(ps.row_perm[i - 1], ps.row_perm[rng.below(i)]);
    for (std::size_t j = base.cols(); j > 1; --j) std::swap(ps.col_perm[j - 1], ps.col_perm[rng.below(j)]);
    for (auto& s : ps.row_signs) s = rng.sign();
    for (auto& s : ps.col_signs) s = rng.sign();
    recipe << " |> permute_scale";
    return {permute_scale(base, ps), recipe.str()};
}

std::vector<CorpusEntry> su_small(CorpusRng& rng, std::size_t count, std::size_t max_dim) {
    std::vector<CorpusEntry> out;
    while (out.size() < count) {
        auto e = random_network_entry(rng, max_dim);
        if (e.matrix.empty() || e.matrix.rows() > max_dim || e.matrix.cols() > max_dim) continue;
        if (!is_su(e.matrix).holds) continue;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CorpusEntry> su_composed(CorpusRng& rng, std::size_t count) {
    const auto pool = su_small(rng, 24, 3);
    std::vector<CorpusEntry> out;
    while (out.size() < count) {
        const std::size_t i = rng.below(pool.size());
        const std::size_t j = rng.below(pool.size());
        const auto& a = pool[i].matrix;
        const auto& b = pool[j].matrix;
        CorpusEntry e;
        switch (rng.below(3)) {
            case 0:
                e = {one_sum(a, b), "sum1(" + pool[i].recipe + ", " + pool[j].recipe + ")"};
                break;
            case 1: {
                bool left_glue = false, right_glue = false;
                for (std::size_t r = 0; r < a.rows(); ++r) left_glue |= a(r, a.cols() - 1) != 0;
                for (std::size_t c = 0; c < b.cols(); ++c) right_glue |= b(0, c) != 0;
                if (!left_glue || !right_glue) continue;
                e = {two_sum(a, b), "sum2(" + pool[i].recipe + ", " + pool[j].recipe + ")"};
                break;
            }
            default: {
                e = pool[i];
                const std::size_t ops = rng.between(1, 3);
                for (std::size_t k = 0; k < ops; ++k) {
                    const auto kind = all_extend_kinds()[rng.below(all_extend_kinds().size())];
                    std::size_t index = 0;
                    if (kind == ExtendKind::unit_row || kind == ExtendKind::repeat_col)
                        index = rng.below(e.matrix.cols());
                    if (kind == ExtendKind::unit_col || kind == ExtendKind::repeat_row)
                        index = rng.below(e.matrix.rows());
                    e.matrix = extend(e.matrix, kind, index);
                    e.recipe += " |> " + std::string(to_string(kind)) + "(" + std::to_string(index) + ")";
                }
            }
        }
        if (e.matrix.rows() > 6 || e.matrix.cols() > 6) continue;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CorpusEntry> non_su(CorpusRng& rng, std::size_t count) {
    std::vector<CorpusEntry> out;
    while (out.size() < count) {
        switch (rng.below(4)) {
            case 0:
                out.push_back(random_signed_embedding(rng, classic_matrix(Classic::B1), "B1"));
                break;
            case 1:
                out.push_back(random_signed_embedding(rng, classic_matrix(Classic::B2), "B2"));
                break;
            case 2:
                out.push_back(random_signed_embedding(rng, classic_matrix(Classic::N2), "N2"));
                break;
            default: {
                auto e = random_network_entry(rng, 6);
                if (e.matrix.empty() || e.matrix.rows() > 6 || e.matrix.cols() > 6) break;
                if (is_su(e.matrix).holds) break;
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<CorpusEntry> gen_corpus(std::uint64_t seed, CorpusProfile profile, std::size_t count) {
    CorpusRng rng(seed);
    switch (profile) {
        case CorpusProfile::su_small:
            return su_small(rng, count, 6);
        case CorpusProfile::su_composed:
            return su_composed(rng, count);
        case CorpusProfile::non_su:
            return non_su(rng, count);
        case CorpusProfile::tu_random: {
            std::vector<CorpusEntry> out;
            while (out.size() < count) {
                auto e = random_network_entry(rng, 6);
                if (e.matrix.empty() || e.matrix.rows() > 6 || e.matrix.cols() > 6) continue;
                out.push_back(std::move(e));
            }
            return out;
        }
    }
    return {};
}

}  // namespace sumod
