#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace daisy {

// Undirected edge, stored with a < b.
struct Edge {
    int a = 0;
    int b = 0;
    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

// A finite simple graph over vertex ids 0..n-1 with optional string labels.
// Adjacency is symmetric, loop-free and duplicate-free by construction.
class GenericGraph {
public:
    GenericGraph() = default;
    explicit GenericGraph(int n) : adj_(n), labels_(n) {}

    int add_vertex(std::string label = "");
    void add_edge(int a, int b);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;
    bool adjacent(int a, int b) const;
    const std::vector<int>& neighbors(int v) const;
    std::vector<Edge> edges() const;  // sorted

    void set_label(int v, std::string label);
    const std::string& label(int v) const;
    // Label of v if set, otherwise the id as text.
    std::string display(int v) const;
    int find_label(const std::string& label) const;  // -1 if absent

private:
    void check_vertex(int v) const;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

// Exact shortest-path distances from `source` within g; -1 marks vertices
// unreachable from the source. Throws if the source is absent.
std::vector<int> bfs_distances(const GenericGraph& g, int source);
std::vector<std::vector<int>> all_pairs_distances(const GenericGraph& g);

// I(u,v) = { x : d(u,x) + d(x,v) = d(u,v) }, sorted by id.
// Throws if u and v lie in different components.
std::vector<int> graph_interval(const GenericGraph& g, int u, int v);

bool is_connected(const GenericGraph& g);

// True iff the union of endpoints of e1 and e2 induces a clique, i.e. some
// clique of g contains both edges. Throws if either pair is not an edge.
bool edges_share_clique(const GenericGraph& g, Edge e1, Edge e2);

// Distances within the subgraph induced by `members` (ids into g), compared
// against distances in g itself. `witness` is the first failing pair in id
// order; unreachable pairs fail with sub_distance = -1.
struct SubsetIsometry {
    bool isometric = false;
    std::optional<std::pair<int, int>> witness;
    int sub_distance = 0;
    int host_distance = 0;
};
SubsetIsometry isometric_in(const GenericGraph& g, const std::vector<int>& members);

GenericGraph path_graph(int n);
GenericGraph cycle_graph(int n);
GenericGraph complete_graph(int n);

}  // namespace daisy
