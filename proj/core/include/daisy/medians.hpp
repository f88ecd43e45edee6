#pragma once

#include <array>
#include <optional>
#include <vector>

#include "daisy/generic_graph.hpp"
#include "daisy/shape.hpp"

namespace daisy {

// A pseudo-median of a triple (u,v,w): a triple (x,y,z) with x,y on a common
// shortest u,v-path, y,z on a common shortest v,w-path, x,z on a common
// shortest u,w-path, and d(x,y) = d(y,z) = d(x,z) minimal. That distance is
// the size; size 0 is a median.
struct MedianTripleIds {
    int x = 0, y = 0, z = 0;
    int size = 0;
    bool operator==(const MedianTripleIds&) const = default;
    auto operator<=>(const MedianTripleIds&) const = default;
};

struct MedianTriple {
    Vertex x, y, z;
    int size = 0;
    bool operator==(const MedianTriple&) const = default;
};

struct PseudoMedianResult {
    // All triples of minimal size, in (x,y,z) role order, sorted. Empty when
    // no triple satisfies the path conditions at any size.
    std::vector<MedianTripleIds> triples;
    int size = -1;  // -1 when triples is empty
};

// Cubic enumeration over all candidate triples of g. The path-containment
// conditions are decided by the distance identities, trying both orders of
// each pair. Throws when u, v, w are not in one component.
PseudoMedianResult pseudo_medians(const GenericGraph& g, int u, int v, int w);

// Minimal pseudo-median size of (u,v,w), or -1 when none exists.
int min_pseudo_median_size(const GenericGraph& g, int u, int v, int w);

// True iff (u,v,r) has a pseudo-median of size 0 or 1. Decided directly by
// a median scan and a triangle scan; no full enumeration.
bool has_small_pseudo_median(const GenericGraph& g, int u, int v, int r);

// The quasi-median of a triple in a Hamming graph by the coordinate rule:
// where all three values differ each vertex keeps its own, elsewhere all
// three take the majority value. Its size is the number of coordinates in
// which u, v, w are pairwise distinct.
MedianTriple quasi_median_hamming(const Shape& shape, const Vertex& u,
                                  const Vertex& v, const Vertex& w);

// Number of coordinates where u, v, w are pairwise distinct.
int quasi_median_size(const Vertex& u, const Vertex& v, const Vertex& w);

struct TriangleConditionReport {
    bool holds = false;
    // (u, v, w) with vw an edge, d(u,v) = d(u,w) >= 2 and no common neighbor
    // of v, w one step closer to u.
    std::optional<std::array<int, 3>> counterexample;
    // Number of (apex, edge) configurations that required a witness; zero on
    // e.g. bipartite graphs, where the condition holds vacuously.
    long long candidates = 0;
};

// For every vertex u and edge vw with d(u,v) = d(u,w) >= 2 there must be a
// common neighbor x of v and w with d(x,u) = d(u,v) - 1.
TriangleConditionReport triangle_condition(const GenericGraph& g);

// The same restricted to u = root.
TriangleConditionReport rooted_triangle_condition(const GenericGraph& g, int root);

}  // namespace daisy
