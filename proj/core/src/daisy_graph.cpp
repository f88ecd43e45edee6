#include "daisy/daisy_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace daisy {

namespace {

// u <= v in the interval order to the root, i.e. u in I(root, v).
bool below(const Vertex& u, const Vertex& v, const Vertex& root) {
    for (std::size_t j = 0; j < root.size(); ++j) {
        if (u[j] != root[j] && u[j] != v[j]) return false;
    }
    return true;
}

// Enumerates all downward-closed subsets of a poset given by per-element
// down-set masks, processing elements in a linear extension with the root
// first. The root is always included, so exactly the daisy vertex sets are
// produced. Stops when the callback returns false.
bool downset_dfs(const std::vector<std::uint64_t>& down, std::size_t pos,
                 std::uint64_t current,
                 const std::function<bool(std::uint64_t)>& emit) {
    if (pos == down.size()) return emit(current);
    // exclude (never for the root at position 0)
    if (pos > 0 && !downset_dfs(down, pos + 1, current, emit)) return false;
    if ((down[pos] & current) == down[pos]) {
        if (!downset_dfs(down, pos + 1, current | (1ULL << pos), emit)) return false;
    }
    return true;
}

struct PosetView {
    // order[t] = index of the t-th element in the linear extension
    std::vector<int> order;
    // down[t] = mask (over positions) of the strict+reflexive down-set minus self
    std::vector<std::uint64_t> down;
};

// Linear extension sorted by (distance to root, index); down-set masks in
// position space.
PosetView poset_view(int n, int root, const std::function<int(int)>& root_dist,
                     const std::function<bool(int, int)>& below_rel) {
    PosetView pv;
    pv.order.resize(n);
    std::iota(pv.order.begin(), pv.order.end(), 0);
    std::stable_sort(pv.order.begin(), pv.order.end(), [&](int a, int b) {
        return root_dist(a) < root_dist(b);
    });
    if (pv.order[0] != root) {
        throw std::logic_error("root is not the minimum of the interval order");
    }
    std::vector<int> position(n);
    for (int t = 0; t < n; ++t) position[pv.order[t]] = t;
    pv.down.assign(n, 0);
    for (int t = 0; t < n; ++t) {
        int v = pv.order[t];
        for (int u = 0; u < n; ++u) {
            if (u != v && below_rel(u, v)) pv.down[t] |= 1ULL << position[u];
        }
    }
    return pv;
}

void check_enum_budget(long long count, int budget, const std::string& what) {
    if (budget > 64) budget = 64;
    if (count > budget) {
        throw std::invalid_argument(what + " has " + std::to_string(count) +
                                    " vertices, exceeding the daisy enumeration budget of " +
                                    std::to_string(budget));
    }
}

}  // namespace

DaisyGraph build_daisy(const Shape& shape, const Vertex& root,
                       const std::vector<Vertex>& generators) {
    if (generators.empty()) {
        throw std::invalid_argument("daisy generator set must be non-empty");
    }
    shape.require(root);
    std::set<Vertex> members;
    for (const Vertex& x : generators) {
        shape.require(x);
        for (Vertex& w : hamming_interval(root, x)) members.insert(std::move(w));
    }
    std::vector<Vertex> verts(members.begin(), members.end());
    DaisyGraph d{LabeledGraph(shape, std::move(verts)), root,
                 {}, generators};
    d.generators = minimal_generators(d.graph.vertices(), root);
    return d;
}

DaisyGraph daisy_from_vertices(const Shape& shape, const Vertex& root,
                               std::vector<Vertex> vertices) {
    DaisyGraph d{LabeledGraph(shape, std::move(vertices)), root, {}, {}};
    d.generators = minimal_generators(d.graph.vertices(), root);
    d.input_generators = d.generators;
    return d;
}

DaisyCheck is_daisy(const Shape& shape, const std::vector<Vertex>& vertices,
                    const Vertex& root) {
    shape.require(root);
    std::vector<Vertex> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!std::binary_search(sorted.begin(), sorted.end(), root)) {
        return {false, root};
    }
    for (const Vertex& v : sorted) {
        shape.require(v);
        for (const Vertex& w : hamming_interval(root, v)) {
            if (!std::binary_search(sorted.begin(), sorted.end(), w)) {
                return {false, v};
            }
        }
    }
    return {true, std::nullopt};
}

std::vector<Vertex> minimal_generators(const std::vector<Vertex>& vertices,
                                       const Vertex& root) {
    std::vector<Vertex> out;
    for (const Vertex& u : vertices) {
        bool maximal = true;
        for (const Vertex& v : vertices) {
            if (u != v && below(u, v, root)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_daisy_graph(const Shape& shape, const Vertex& root,
                          const std::function<bool(const std::vector<Vertex>&)>& fn,
                          int budget) {
    shape.require(root);
    check_enum_budget(shape.vertex_count(), budget, "shape " + format_shape(shape));
    std::vector<Vertex> verts = enumerate_vertices(shape);
    int n = static_cast<int>(verts.size());
    int root_idx = static_cast<int>(
        std::lower_bound(verts.begin(), verts.end(), root) - verts.begin());
    PosetView pv = poset_view(
        n, root_idx, [&](int v) { return hamming_distance(root, verts[v]); },
        [&](int u, int v) { return below(verts[u], verts[v], root); });
    downset_dfs(pv.down, 0, 0, [&](std::uint64_t mask) {
        std::vector<Vertex> members;
        for (int t = 0; t < n; ++t) {
            if (mask >> t & 1) members.push_back(verts[pv.order[t]]);
        }
        std::sort(members.begin(), members.end());
        return fn(members);
    });
}

std::vector<std::vector<Vertex>> enumerate_daisy_graphs(const Shape& shape,
                                                        const Vertex& root,
                                                        int budget) {
    std::vector<std::vector<Vertex>> out;
    for_each_daisy_graph(
        shape, root,
        [&](const std::vector<Vertex>& members) {
            out.push_back(members);
            return true;
        },
        budget);
    return out;
}

std::vector<int> build_daisy(const GenericGraph& host, int root,
                             const std::vector<int>& generators) {
    if (generators.empty()) {
        throw std::invalid_argument("daisy generator set must be non-empty");
    }
    std::set<int> members;
    for (int x : generators) {
        for (int w : graph_interval(host, root, x)) members.insert(w);
    }
    return {members.begin(), members.end()};
}

DaisyCheckIds is_daisy(const GenericGraph& host, const std::vector<int>& vertices,
                       int root) {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!std::binary_search(sorted.begin(), sorted.end(), root)) {
        return {false, root};
    }
    for (int v : sorted) {
        for (int w : graph_interval(host, root, v)) {
            if (!std::binary_search(sorted.begin(), sorted.end(), w)) {
                return {false, v};
            }
        }
    }
    return {true, std::nullopt};
}

std::vector<int> minimal_generators(const GenericGraph& host,
                                    const std::vector<int>& vertices, int root) {
    std::vector<int> dist_root = bfs_distances(host, root);
    std::vector<int> out;
    for (int u : vertices) {
        std::vector<int> dist_u = bfs_distances(host, u);
        bool maximal = true;
        for (int v : vertices) {
            // u in I(root, v), u != v
            if (u != v && dist_root[u] >= 0 && dist_u[v] >= 0 &&
                dist_root[u] + dist_u[v] == dist_root[v]) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_daisy_set(const GenericGraph& host, int root,
                        const std::function<bool(const std::vector<int>&)>& fn,
                        int budget) {
    check_enum_budget(host.vertex_count(), budget, "host graph");
    if (!is_connected(host)) {
        throw std::invalid_argument("daisy enumeration requires a connected host");
    }
    int n = host.vertex_count();
    std::vector<std::vector<int>> dist = all_pairs_distances(host);
    PosetView pv = poset_view(
        n, root, [&](int v) { return dist[root][v]; },
        [&](int u, int v) { return dist[root][u] + dist[u][v] == dist[root][v]; });
    downset_dfs(pv.down, 0, 0, [&](std::uint64_t mask) {
        std::vector<int> members;
        for (int t = 0; t < n; ++t) {
            if (mask >> t & 1) members.push_back(pv.order[t]);
        }
        std::sort(members.begin(), members.end());
        return fn(members);
    });
}

Vertex MinimalHostResult::map_vertex(const Vertex& v) const {
    Vertex out;
    out.reserve(kept_coords.size());
    for (std::size_t t = 0; t < kept_coords.size(); ++t) {
        int value = v[kept_coords[t]];
        int mapped = value < static_cast<int>(value_maps[t].size())
                         ? value_maps[t][value]
                         : -1;
        if (mapped < 0) {
            throw std::invalid_argument("vertex " + format_vertex(v) +
                                        " uses a value absent from the canonical host");
        }
        out.push_back(mapped);
    }
    return out;
}

MinimalHostResult canonical_minimal_host(const DaisyGraph& d) {
    const Shape& shape = d.graph.shape();
    if (d.root != shape.zero()) {
        throw std::invalid_argument("minimal-host canonicalization requires root 0^n");
    }
    bool identity = true;
    std::vector<int> kept;
    std::vector<std::vector<int>> maps;
    std::vector<int> new_factors;
    for (int j = 0; j < shape.dim(); ++j) {
        std::set<int> used;
        for (const Vertex& v : d.graph.vertices()) used.insert(v[j]);
        if (used.size() == 1) {  // only 0 appears: drop the coordinate
            identity = false;
            continue;
        }
        std::vector<int> map(shape.factor(j), -1);
        int next = 0;
        for (int value : used) map[value] = next++;
        if (next != shape.factor(j)) identity = false;
        kept.push_back(j);
        maps.push_back(std::move(map));
        new_factors.push_back(next);
    }
    Shape new_shape{new_factors};
    std::vector<Vertex> mapped;
    mapped.reserve(d.graph.vertices().size());
    for (const Vertex& v : d.graph.vertices()) {
        Vertex w;
        w.reserve(kept.size());
        for (std::size_t t = 0; t < kept.size(); ++t) w.push_back(maps[t][v[kept[t]]]);
        mapped.push_back(std::move(w));
    }
    return {daisy_from_vertices(new_shape, new_shape.zero(), std::move(mapped)),
            identity, std::move(kept), std::move(maps)};
}

bool is_minimal_host(const DaisyGraph& d) {
    return canonical_minimal_host(d).identity;
}

std::vector<int> daisy_cube_of_singleton(const DaisyGraph& d) {
    if (d.generators.size() != 1) {
        throw std::invalid_argument("daisy cube word is defined for |X| = 1, got |X| = " +
                                    std::to_string(d.generators.size()));
    }
    const Vertex& x = d.generators.front();
    std::vector<int> word;
    word.reserve(x.size());
    for (int value : x) word.push_back(std::min(value, 1));
    return word;
}

}  // namespace daisy
