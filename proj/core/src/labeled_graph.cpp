#include "daisy/labeled_graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace daisy {

LabeledGraph::LabeledGraph(Shape shape, std::vector<Vertex> vertices)
    : shape_(std::move(shape)), vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
        throw std::invalid_argument("labeled graph needs at least one vertex");
    }
    for (const Vertex& v : vertices_) shape_.require(v);
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

    adj_.resize(vertices_.size());
    for (int i = 0; i < size(); ++i) {
        for (int j = i + 1; j < size(); ++j) {
            if (hamming_adjacent(vertices_[i], vertices_[j])) {
                adj_[i].push_back(j);
                adj_[j].push_back(i);
            }
        }
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int LabeledGraph::index_of(const Vertex& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return -1;
    return static_cast<int>(it - vertices_.begin());
}

bool LabeledGraph::adjacent_indices(int i, int j) const {
    return std::binary_search(adj_[i].begin(), adj_[i].end(), j);
}

std::vector<Edge> LabeledGraph::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < size(); ++i) {
        for (int j : adj_[i]) {
            if (i < j) out.emplace_back(i, j);
        }
    }
    return out;
}

int LabeledGraph::edge_count() const {
    int total = 0;
    for (const auto& nb : adj_) total += static_cast<int>(nb.size());
    return total / 2;
}

GenericGraph LabeledGraph::to_generic() const {
    GenericGraph g(size());
    for (int i = 0; i < size(); ++i) g.set_label(i, format_vertex(vertices_[i]));
    for (int i = 0; i < size(); ++i) {
        for (int j : adj_[i]) {
            if (i < j) g.add_edge(i, j);
        }
    }
    return g;
}

static std::vector<int> bfs_from_index(const LabeledGraph& g, int source) {
    std::vector<int> dist(g.size(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> bfs_distances(const LabeledGraph& g, const Vertex& source) {
    int s = g.index_of(source);
    if (s < 0) {
        throw std::invalid_argument("BFS source " + format_vertex(source) +
                                    " is not a member of the graph");
    }
    return bfs_from_index(g, s);
}

std::vector<Vertex> graph_interval(const LabeledGraph& g, const Vertex& u,
                                   const Vertex& v) {
    std::vector<int> du = bfs_distances(g, u);
    int vi = g.index_of(v);
    if (vi < 0) {
        throw std::invalid_argument("vertex " + format_vertex(v) +
                                    " is not a member of the graph");
    }
    if (du[vi] < 0) {
        throw std::invalid_argument("vertices " + format_vertex(u) + " and " +
                                    format_vertex(v) + " lie in different components");
    }
    std::vector<int> dv = bfs_from_index(g, vi);
    std::vector<Vertex> out;
    for (int x = 0; x < g.size(); ++x) {
        if (du[x] >= 0 && dv[x] >= 0 && du[x] + dv[x] == du[vi]) {
            out.push_back(g.vertex(x));
        }
    }
    return out;
}

IsometryReport is_isometric(const LabeledGraph& g) {
    for (int i = 0; i < g.size(); ++i) {
        std::vector<int> dist = bfs_from_index(g, i);
        for (int j = i + 1; j < g.size(); ++j) {
            int host = hamming_distance(g.vertex(i), g.vertex(j));
            if (dist[j] != host) {
                return {false, std::make_pair(g.vertex(i), g.vertex(j)), dist[j], host};
            }
        }
    }
    return {true, std::nullopt, 0, 0};
}

LabeledGraph full_host(const Shape& shape, long long budget) {
    return LabeledGraph(shape, enumerate_vertices(shape, budget));
}

}  // namespace daisy
