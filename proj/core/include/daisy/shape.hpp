#pragma once

#include <string>
#include <vector>

namespace daisy {

// A vertex of a Hamming graph: one coordinate per factor, coordinate j in
// [k_j]_0. The empty tuple is the single vertex of the one-vertex graph.
using Vertex = std::vector<int>;

// Factor sizes (k_1,...,k_n) of the Hamming graph K_{k_1} x ... x K_{k_n}.
// Every factor must be at least 2; n = 0 encodes the one-vertex graph.
// The host graph is implicit and never materialized as an edge list.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> factors);

    int dim() const { return static_cast<int>(factors_.size()); }
    int factor(int coord) const;
    const std::vector<int>& factors() const { return factors_; }
    long long vertex_count() const;

    bool contains(const Vertex& v) const;
    // Throws std::invalid_argument naming the offending tuple.
    void require(const Vertex& v) const;

    Vertex zero() const { return Vertex(factors_.size(), 0); }

    bool operator==(const Shape&) const = default;

private:
    std::vector<int> factors_;
};

inline constexpr long long kDefaultEnumBudget = 1'000'000;

// Number of coordinates in which u and v differ; equals the graph distance
// in the Hamming graph. Throws on length mismatch.
int hamming_distance(const Vertex& u, const Vertex& v);

// True iff hamming_distance(u, v) == 1.
bool hamming_adjacent(const Vertex& u, const Vertex& v);

// All vertices w with w_j = u_j where u_j = v_j and w_j in {u_j, v_j}
// otherwise; equivalently all vertices on shortest u,v-paths in the host.
// Sorted lexicographically; cardinality 2^d(u,v).
std::vector<Vertex> hamming_interval(const Vertex& u, const Vertex& v);

// The vertex with value `value` in coordinate `coord` and 0 elsewhere.
// `coord` is 0-based. Throws on out-of-range coord or value.
Vertex unit_vertex(const Shape& shape, int coord, int value);

// All vertices of the shape in lexicographic order. Throws if the vertex
// count exceeds the budget.
std::vector<Vertex> enumerate_vertices(const Shape& shape,
                                       long long budget = kDefaultEnumBudget);

// "1,0,2" for (1,0,2); "-" for the empty tuple.
std::string format_vertex(const Vertex& v);
std::string format_shape(const Shape& s);
// Inverse of format_vertex; throws std::invalid_argument on bad input.
Vertex parse_vertex(const std::string& text);
Shape parse_shape(const std::string& text);

}  // namespace daisy
