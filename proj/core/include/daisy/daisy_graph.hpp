#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "daisy/labeled_graph.hpp"

namespace daisy {

// The daisy graph of a rooted host generated by X: the subgraph induced by
// the union of the intervals I(root, x) over x in X. Its vertex set is
// downward closed: u in V implies I(root, u) is contained in V.
struct DaisyGraph {
    LabeledGraph graph;
    Vertex root;
    // Canonical generator set: the unique antichain of maximal vertices under
    // u <= v iff u in I(root, v). Regenerating from it reproduces the vertex set.
    std::vector<Vertex> generators;
    // Generators as supplied by the caller, kept for provenance.
    std::vector<Vertex> input_generators;
};

// Builds the daisy graph of the Hamming host. Throws on empty X or invalid
// vertices. The stored generators are recomputed as the maximal members.
DaisyGraph build_daisy(const Shape& shape, const Vertex& root,
                       const std::vector<Vertex>& generators);

// Wraps an already-known daisy vertex set without revalidating downward
// closure (generators are still recomputed).
DaisyGraph daisy_from_vertices(const Shape& shape, const Vertex& root,
                               std::vector<Vertex> vertices);

struct DaisyCheck {
    bool is_daisy = false;
    // First violating vertex in lexicographic order (the root itself when it
    // is missing from the set).
    std::optional<Vertex> witness;
};

// True iff the set is downward closed under intervals to the root, i.e. it
// is the vertex set of a daisy graph of the host (with X = maximal members).
DaisyCheck is_daisy(const Shape& shape, const std::vector<Vertex>& vertices,
                    const Vertex& root);

// Maximal members of the set under u <= v iff u in I(root, v); the unique
// antichain generating the set when it is downward closed. Sorted.
std::vector<Vertex> minimal_generators(const std::vector<Vertex>& vertices,
                                       const Vertex& root);

inline constexpr int kDefaultDaisyEnumBudget = 16;

// Streams every distinct daisy graph of the host exactly once, as sorted
// vertex sets (equivalently: every downward-closed set containing the root,
// one per antichain of the interval order). Deterministic order. The
// callback may return false to stop early. Throws if the host vertex count
// exceeds the budget (hard cap 64).
void for_each_daisy_graph(const Shape& shape, const Vertex& root,
                          const std::function<bool(const std::vector<Vertex>&)>& fn,
                          int budget = kDefaultDaisyEnumBudget);

std::vector<std::vector<Vertex>> enumerate_daisy_graphs(
    const Shape& shape, const Vertex& root, int budget = kDefaultDaisyEnumBudget);

// --- Daisy graphs of arbitrary rooted hosts ------------------------------

std::vector<int> build_daisy(const GenericGraph& host, int root,
                             const std::vector<int>& generators);

struct DaisyCheckIds {
    bool is_daisy = false;
    std::optional<int> witness;
};
DaisyCheckIds is_daisy(const GenericGraph& host, const std::vector<int>& vertices,
                       int root);
std::vector<int> minimal_generators(const GenericGraph& host,
                                    const std::vector<int>& vertices, int root);
void for_each_daisy_set(const GenericGraph& host, int root,
                        const std::function<bool(const std::vector<int>&)>& fn,
                        int budget = kDefaultDaisyEnumBudget);

// --- Minimal hosts --------------------------------------------------------

// Relabeling that shrinks the host to the smallest shape realizing the same
// daisy graph: coordinates that are zero on every vertex are dropped, and in
// each remaining coordinate the used values are remapped onto a contiguous
// range preserving 0 and their relative order. After canonicalization every
// level set W_i^j of the remaining host is non-empty.
struct MinimalHostResult {
    DaisyGraph canonical;
    bool identity = false;           // true when nothing was dropped or remapped
    std::vector<int> kept_coords;    // original coordinate indices, ascending
    // value_maps[t][old] = new value in kept coordinate t, or -1 if unused.
    std::vector<std::vector<int>> value_maps;

    // Maps a vertex of the original host into the canonical host.
    Vertex map_vertex(const Vertex& v) const;
};

// Requires root = 0^n.
MinimalHostResult canonical_minimal_host(const DaisyGraph& d);

// True iff the daisy graph already lives on its minimal host.
bool is_minimal_host(const DaisyGraph& d);

// For |X| = 1 the daisy graph is isomorphic to a daisy cube of the
// hypercube of the same dimension; returns its 0/1 generator word
// y with y_i = min(x_i, 1). Throws when |X| != 1.
std::vector<int> daisy_cube_of_singleton(const DaisyGraph& d);

}  // namespace daisy
