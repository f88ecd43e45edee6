#include "daisy/generic_graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace daisy {

void GenericGraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) {
        throw std::invalid_argument("vertex id " + std::to_string(v) +
                                    " out of range (graph has " +
                                    std::to_string(vertex_count()) + " vertices)");
    }
}

int GenericGraph::add_vertex(std::string label) {
    adj_.emplace_back();
    labels_.push_back(std::move(label));
    return vertex_count() - 1;
}

void GenericGraph::add_edge(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
    if (adjacent(a, b)) return;
    adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
}

int GenericGraph::edge_count() const {
    int total = 0;
    for (const auto& nb : adj_) total += static_cast<int>(nb.size());
    return total / 2;
}

bool GenericGraph::adjacent(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

const std::vector<int>& GenericGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<Edge> GenericGraph::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < vertex_count(); ++v) {
        for (int w : adj_[v]) {
            if (v < w) out.emplace_back(v, w);
        }
    }
    return out;
}

void GenericGraph::set_label(int v, std::string label) {
    check_vertex(v);
    labels_[v] = std::move(label);
}

const std::string& GenericGraph::label(int v) const {
    check_vertex(v);
    return labels_[v];
}

std::string GenericGraph::display(int v) const {
    check_vertex(v);
    return labels_[v].empty() ? std::to_string(v) : labels_[v];
}

int GenericGraph::find_label(const std::string& label) const {
    for (int v = 0; v < vertex_count(); ++v) {
        if (labels_[v] == label) return v;
    }
    return -1;
}

std::vector<int> bfs_distances(const GenericGraph& g, int source) {
    if (source < 0 || source >= g.vertex_count()) {
        throw std::invalid_argument("BFS source " + std::to_string(source) +
                                    " is not a vertex");
    }
    std::vector<int> dist(g.vertex_count(), -1);
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

std::vector<std::vector<int>> all_pairs_distances(const GenericGraph& g) {
    std::vector<std::vector<int>> dist;
    dist.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) dist.push_back(bfs_distances(g, v));
    return dist;
}

std::vector<int> graph_interval(const GenericGraph& g, int u, int v) {
    std::vector<int> du = bfs_distances(g, u);
    if (du[v] < 0) {
        throw std::invalid_argument("vertices " + g.display(u) + " and " + g.display(v) +
                                    " lie in different components");
    }
    std::vector<int> dv = bfs_distances(g, v);
    std::vector<int> out;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (du[x] >= 0 && dv[x] >= 0 && du[x] + dv[x] == du[v]) out.push_back(x);
    }
    return out;
}

bool is_connected(const GenericGraph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<int> dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool edges_share_clique(const GenericGraph& g, Edge e1, Edge e2) {
    for (Edge e : {e1, e2}) {
        if (!g.adjacent(e.a, e.b)) {
            throw std::invalid_argument("pair " + g.display(e.a) + "-" + g.display(e.b) +
                                        " is not an edge");
        }
    }
    std::vector<int> ends{e1.a, e1.b, e2.a, e2.b};
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    for (std::size_t i = 0; i < ends.size(); ++i) {
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
            if (!g.adjacent(ends[i], ends[j])) return false;
        }
    }
    return true;
}

SubsetIsometry isometric_in(const GenericGraph& g, const std::vector<int>& members) {
    if (members.empty()) {
        throw std::invalid_argument("isometric_in: empty vertex set");
    }
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    GenericGraph sub(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (g.adjacent(sorted[i], sorted[j])) {
                sub.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        std::vector<int> sub_dist = bfs_distances(sub, static_cast<int>(i));
        std::vector<int> host_dist = bfs_distances(g, sorted[i]);
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            int ds = sub_dist[j];
            int dh = host_dist[sorted[j]];
            if (ds != dh) {
                return {false, std::make_pair(sorted[i], sorted[j]), ds, dh};
            }
        }
    }
    return {true, std::nullopt, 0, 0};
}

GenericGraph path_graph(int n) {
    GenericGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

GenericGraph cycle_graph(int n) {
    GenericGraph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

GenericGraph complete_graph(int n) {
    GenericGraph g(n);
    for (int v = 0; v < n; ++v) {
        for (int w = v + 1; w < n; ++w) g.add_edge(v, w);
    }
    return g;
}

}  // namespace daisy
