#include "daisy/relations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace daisy {

namespace {

void require_edge(const GenericGraph& g, Edge e) {
    if (!g.adjacent(e.a, e.b)) {
        throw std::invalid_argument("pair " + g.display(e.a) + "-" + g.display(e.b) +
                                    " is not an edge");
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<EdgeClass> classes_from_unionfind(const std::vector<Edge>& edges,
                                              UnionFind& uf) {
    std::vector<EdgeClass> out;
    std::vector<int> root_of_class;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int r = uf.find(static_cast<int>(i));
        auto it = std::find(root_of_class.begin(), root_of_class.end(), r);
        std::size_t idx;
        if (it == root_of_class.end()) {
            root_of_class.push_back(r);
            out.push_back({});
            idx = out.size() - 1;
        } else {
            idx = static_cast<std::size_t>(it - root_of_class.begin());
        }
        out[idx].edges.push_back(edges[i]);
    }
    for (EdgeClass& c : out) std::sort(c.edges.begin(), c.edges.end());
    std::sort(out.begin(), out.end(), [](const EdgeClass& a, const EdgeClass& b) {
        return a.edges.front() < b.edges.front();
    });
    return out;
}

// Among the edges of the class incident to `root`, the one whose other
// endpoint differs from the root in the smallest (coordinate, value) pair.
std::optional<Edge> smallest_root_edge(const LabeledGraph& g, const EdgeClass& cls,
                                       const Vertex& root) {
    int r = g.index_of(root);
    if (r < 0) {
        throw std::invalid_argument("root " + format_vertex(root) +
                                    " is not a member of the graph");
    }
    std::optional<Edge> best;
    std::pair<int, int> best_key{0, 0};
    for (const Edge& e : cls.edges) {
        if (e.a != r && e.b != r) continue;
        const Vertex& other = g.vertex(e.a == r ? e.b : e.a);
        std::pair<int, int> key{0, 0};
        for (std::size_t j = 0; j < root.size(); ++j) {
            if (other[j] != root[j]) {
                key = {static_cast<int>(j), other[j]};
                break;
            }
        }
        if (!best || key < best_key) {
            best = e;
            best_key = key;
        }
    }
    return best;
}

bool tilde_with_dist(const std::vector<int>& du, const std::vector<int>& dv, Edge e2) {
    auto side = [&](int x) {  // -1: closer to v, +1: closer to u, 0: tie
        if (du[x] < dv[x]) return 1;
        if (dv[x] < du[x]) return -1;
        return 0;
    };
    int sa = side(e2.a), sb = side(e2.b);
    return (sa == 1 && sb == -1) || (sa == -1 && sb == 1);
}

}  // namespace

std::vector<int> w_set(const GenericGraph& g, int u, int v) {
    require_edge(g, Edge(u, v));
    std::vector<int> du = bfs_distances(g, u);
    std::vector<int> dv = bfs_distances(g, v);
    std::vector<int> out;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (du[x] >= 0 && (dv[x] < 0 || du[x] < dv[x])) out.push_back(x);
    }
    return out;
}

bool tilde_related(const GenericGraph& g, Edge e1, Edge e2) {
    require_edge(g, e1);
    require_edge(g, e2);
    std::vector<int> du = bfs_distances(g, e1.a);
    std::vector<int> dv = bfs_distances(g, e1.b);
    return tilde_with_dist(du, dv, e2);
}

bool delta_related(const GenericGraph& g, Edge e1, Edge e2) {
    if (tilde_related(g, e1, e2)) return true;
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : edges) {
        if (!tilde_related(g, e2, e)) continue;
        for (const Edge& f : edges) {
            if (edges_share_clique(g, e, f) && tilde_related(g, e1, f)) return true;
        }
    }
    return false;
}

std::vector<EdgeClass> delta_classes(const GenericGraph& g) {
    std::vector<Edge> edges = g.edges();
    int m = static_cast<int>(edges.size());
    UnionFind uf(m);
    // ~-classes first
    for (int i = 0; i < m; ++i) {
        std::vector<int> du = bfs_distances(g, edges[i].a);
        std::vector<int> dv = bfs_distances(g, edges[i].b);
        for (int j = i + 1; j < m; ++j) {
            if (tilde_with_dist(du, dv, edges[j])) uf.unite(i, j);
        }
    }
    // merge classes with representatives in a common clique; the union-find
    // provides the transitive closure
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (uf.find(i) != uf.find(j) && edges_share_clique(g, edges[i], edges[j])) {
                uf.unite(i, j);
            }
        }
    }
    return classes_from_unionfind(edges, uf);
}

std::vector<EdgeClass> delta_classes_by_closure(const GenericGraph& g) {
    std::vector<Edge> edges = g.edges();
    int m = static_cast<int>(edges.size());
    UnionFind uf(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (uf.find(i) != uf.find(j) && delta_related(g, edges[i], edges[j])) {
                uf.unite(i, j);
            }
        }
    }
    return classes_from_unionfind(edges, uf);
}

std::vector<EdgeClass> delta_classes(const LabeledGraph& g,
                                     const std::optional<Vertex>& root) {
    std::vector<EdgeClass> classes = delta_classes(g.to_generic());
    if (root) {
        int r = g.index_of(*root);
        if (r < 0) {
            throw std::invalid_argument("root " + format_vertex(*root) +
                                        " is not a member of the graph");
        }
        for (EdgeClass& c : classes) {
            c.anchor = smallest_root_edge(g, c, *root);
        }
    }
    return classes;
}

CoordinateSlice coordinate_slice(const LabeledGraph& g, int coord) {
    int k = g.shape().factor(coord);  // throws when coord is out of range
    CoordinateSlice slice;
    slice.coord = coord;
    slice.levels.resize(k);
    slice.contacts.resize(k);
    slice.zero_contacts.resize(k > 0 ? k - 1 : 0);
    for (int i = 0; i < g.size(); ++i) {
        slice.levels[g.vertex(i)[coord]].push_back(i);
    }
    auto level_of = [&](int i) { return g.vertex(i)[coord]; };
    for (int value = 0; value < k; ++value) {
        for (int i : slice.levels[value]) {
            for (int nb : g.neighbors(i)) {
                if (level_of(nb) == 0) {
                    slice.contacts[value].push_back(i);
                    break;
                }
            }
        }
    }
    for (int value = 1; value < k; ++value) {
        for (int i : slice.levels[0]) {
            for (int nb : g.neighbors(i)) {
                if (level_of(nb) == value) {
                    slice.zero_contacts[value - 1].push_back(i);
                    break;
                }
            }
        }
        for (int i : slice.zero_contacts[value - 1]) slice.zero_contact_union.push_back(i);
    }
    std::sort(slice.zero_contact_union.begin(), slice.zero_contact_union.end());
    slice.zero_contact_union.erase(
        std::unique(slice.zero_contact_union.begin(), slice.zero_contact_union.end()),
        slice.zero_contact_union.end());
    return slice;
}

bool verify_w_equals_wuv(const LabeledGraph& g, int coord, int value) {
    CoordinateSlice slice = coordinate_slice(g, coord);
    if (value < 0 || value >= static_cast<int>(slice.levels.size()) ||
        slice.levels[value].empty()) {
        throw std::invalid_argument("level " + std::to_string(value) + " of coordinate " +
                                    std::to_string(coord) + " is empty");
    }
    Vertex root = g.shape().zero();
    int r = g.index_of(root);
    if (r < 0) {
        throw std::invalid_argument("graph does not contain the root 0^n");
    }
    GenericGraph gg = g.to_generic();
    std::vector<int> half;
    if (value == 0) {
        // the root side of the edge toward the smallest populated nonzero level
        int other = -1;
        for (int l = 1; l < static_cast<int>(slice.levels.size()); ++l) {
            if (!slice.levels[l].empty()) {
                other = g.index_of(unit_vertex(g.shape(), coord, l));
                break;
            }
        }
        if (other < 0) {
            throw std::invalid_argument("coordinate " + std::to_string(coord) +
                                        " has no populated nonzero level");
        }
        half = w_set(gg, r, other);
    } else {
        int e = g.index_of(unit_vertex(g.shape(), coord, value));
        if (e < 0) {
            throw std::invalid_argument("unit vertex of coordinate " +
                                        std::to_string(coord) + ", value " +
                                        std::to_string(value) +
                                        " is not a member of the graph");
        }
        half = w_set(gg, e, r);
    }
    return half == slice.levels[value];
}

PeripheralReport is_peripheral_class(const LabeledGraph& g, int coord) {
    CoordinateSlice slice = coordinate_slice(g, coord);
    for (std::size_t value = 1; value < slice.levels.size(); ++value) {
        if (slice.contacts[value] != slice.levels[value]) {
            for (int i : slice.levels[value]) {
                if (!std::binary_search(slice.contacts[value].begin(),
                                        slice.contacts[value].end(), i)) {
                    return {false, g.vertex(i)};
                }
            }
        }
    }
    return {true, std::nullopt};
}

Edge anchored_edge(const LabeledGraph& g, const EdgeClass& cls, const Vertex& root) {
    std::optional<Edge> best = smallest_root_edge(g, cls, root);
    if (!best) {
        throw std::runtime_error(
            "delta class has no edge incident to the root; this contradicts the "
            "anchoring property of isometric daisy graphs over minimal hosts");
    }
    return *best;
}

}  // namespace daisy
