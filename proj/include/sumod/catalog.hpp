#ifndef SUMOD_CATALOG_HPP
#define SUMOD_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumod/int_matrix.hpp"

namespace sumod {

/*
 * Named constant matrices in their standard row/column order:
 *   B1, B2 - the two TU compact representations of R10 (neither is SU);
 *   N1, N2 - the SU and the non-SU TU representation of the wheel W3.
 */
enum class Classic { B1, B2, N1, N2 };

IntMatrix classic_matrix(Classic which);
/// Accepts "B1", "B2", "N1", "N2" (case-insensitive); throws InvalidArgument otherwise.
IntMatrix classic_matrix(std::string_view name);

struct Arc {
    std::size_t tail = 0;
    std::size_t head = 0;
};

/// Directed graph; arc ids are positions in `arcs`. Self-loops are rejected.
struct Digraph {
    std::size_t vertices = 0;
    std::vector<Arc> arcs;
};

/// Arc ids of a spanning tree (orientation ignored).
using TreeSelection = std::vector<std::size_t>;

/// Throws InvalidArgument unless `tree` spans `g` without cycles.
void require_spanning_tree(const Digraph& g, const TreeSelection& tree);

/*
 * Network matrix: rows are the tree arcs (ascending id), columns the non-tree
 * arcs (ascending id). Entry (e, f) is +1 when tree arc e is traversed forward
 * on the tree path from tail(f) to head(f), -1 when backward, 0 otherwise.
 */
IntMatrix network_matrix(const Digraph& g, const TreeSelection& tree);

/// Every spanning tree of `g`, each as an ascending arc-id list, in lexicographic order.
std::vector<TreeSelection> spanning_trees(const Digraph& g);

/// Wheel W_k: hub 0, rim 1..k; arcs 0..k-1 are spokes (0 -> i), arcs k..2k-1
/// the rim (i -> i+1, and k -> 1).
Digraph wheel_graph(std::size_t spokes);
/// The spoke tree of wheel_graph(spokes) (gives the SU representation).
TreeSelection wheel_star_tree(std::size_t spokes);
/// A Hamiltonian path tree of wheel_graph(spokes): spoke 0->1 plus rim arcs 1->2 ... (k-1)->k.
TreeSelection wheel_path_tree(std::size_t spokes);

enum class CorpusProfile { su_small, su_composed, non_su, tu_random };

const char* to_string(CorpusProfile p);
std::optional<CorpusProfile> corpus_profile_from_string(std::string_view name);

/// Name of the pseudo-random generator behind gen_corpus, recorded in manifests.
inline constexpr const char* kCorpusGenerator = "mt19937_64";

struct CorpusEntry {
    IntMatrix matrix;
    std::string recipe;  ///< how the matrix was built, for exact regeneration
};

/*
 * Deterministic corpus factory. Only the raw 64-bit output of std::mt19937_64
 * is used (no std distributions), so a seed reproduces the same sequence on
 * every standard library.
 *   su_small    - random network matrices (<= 6x6) that pass is_su
 *   su_composed - 1-sums, 2-sums and SU-preserving extensions of su_small
 *                 outputs, capped at 6x6
 *   non_su      - B1/B2 and N2 embeddings, plus random network matrices
 *                 failing is_su
 *   tu_random   - random network matrices, unfiltered
 */
std::vector<CorpusEntry> gen_corpus(std::uint64_t seed, CorpusProfile profile, std::size_t count = 50);

/// Portable helpers over mt19937_64, shared with the test generators.
class CorpusRng {
public:
    explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform-ish integer in [0, bound); bound > 0.
    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool coin() { return (engine_() >> 63) != 0; }
    int sign() { return coin() ? 1 : -1; }
    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Random connected digraph on `vertices` vertices with `extra` non-tree arcs;
/// returns the graph together with the random spanning tree it was grown from.
std::pair<Digraph, TreeSelection> random_network(CorpusRng& rng, std::size_t vertices, std::size_t extra);

}  // namespace sumod

#endif
