#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "daisy/generic_graph.hpp"
#include "daisy/shape.hpp"

namespace daisy {

// An induced subgraph of a Hamming graph, given by an explicit vertex set
// under a Shape. Adjacency is Hamming distance 1 within the set; the host
// is never materialized.
class LabeledGraph {
public:
    LabeledGraph(Shape shape, std::vector<Vertex> vertices);

    const Shape& shape() const { return shape_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    const Vertex& vertex(int i) const { return vertices_[i]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    int index_of(const Vertex& v) const;  // -1 if absent
    bool contains(const Vertex& v) const { return index_of(v) >= 0; }
    const std::vector<int>& neighbors(int i) const { return adj_[i]; }
    bool adjacent_indices(int i, int j) const;
    std::vector<Edge> edges() const;
    int edge_count() const;

    // Generic view; labels are the formatted coordinate tuples. Vertex id i
    // corresponds to vertex(i).
    GenericGraph to_generic() const;

    bool operator==(const LabeledGraph& other) const {
        return shape_ == other.shape_ && vertices_ == other.vertices_;
    }

private:
    Shape shape_;
    std::vector<Vertex> vertices_;          // sorted lexicographically, unique
    std::vector<std::vector<int>> adj_;     // induced Hamming adjacency
};

// BFS distances inside the induced subgraph (not the host); -1 unreachable.
// Throws if the source is not a member.
std::vector<int> bfs_distances(const LabeledGraph& g, const Vertex& source);

// Interval inside the induced subgraph. Throws if u, v are in different
// components of the subgraph.
std::vector<Vertex> graph_interval(const LabeledGraph& g, const Vertex& u,
                                   const Vertex& v);

struct IsometryReport {
    bool isometric = false;
    // Lexicographically first failing pair; present iff not isometric.
    std::optional<std::pair<Vertex, Vertex>> witness;
    int sub_distance = 0;   // -1 when the witness pair is disconnected
    int host_distance = 0;
};

// True iff for every vertex pair the BFS distance inside the subgraph equals
// the Hamming distance. A disconnected subgraph is non-isometric with an
// unreachable witness pair. Throws on an empty graph.
IsometryReport is_isometric(const LabeledGraph& g);

// Full Hamming host as a labeled graph.
LabeledGraph full_host(const Shape& shape, long long budget = kDefaultEnumBudget);

}  // namespace daisy
