#include "daisy/medians.hpp"

#include <algorithm>
#include <stdexcept>

namespace daisy {

namespace {

// "There is a shortest a,b-path containing both p and q", decided by the
// distance identity with either of p, q on the a-side.
inline bool on_common_geodesic(const std::vector<std::vector<int>>& d, int a, int b,
                               int p, int q) {
    return d[a][p] + d[p][q] + d[q][b] == d[a][b] ||
           d[a][q] + d[q][p] + d[p][b] == d[a][b];
}

void require_one_component(const std::vector<std::vector<int>>& d, int u, int v,
                           int w) {
    if (d[u][v] < 0 || d[v][w] < 0 || d[u][w] < 0) {
        throw std::invalid_argument("pseudo-median inputs lie in different components");
    }
}

}  // namespace

PseudoMedianResult pseudo_medians(const GenericGraph& g, int u, int v, int w) {
    std::vector<std::vector<int>> d = all_pairs_distances(g);
    require_one_component(d, u, v, w);
    PseudoMedianResult res;
    int n = g.vertex_count();
    for (int x = 0; x < n; ++x) {
        if (d[u][x] < 0) continue;
        for (int y = 0; y < n; ++y) {
            int s = d[x][y];
            if (s < 0 || (res.size >= 0 && s > res.size)) continue;
            if (!on_common_geodesic(d, u, v, x, y)) continue;
            for (int z = 0; z < n; ++z) {
                if (d[y][z] != s || d[x][z] != s) continue;
                if (!on_common_geodesic(d, v, w, y, z)) continue;
                if (!on_common_geodesic(d, u, w, x, z)) continue;
                if (res.size < 0 || s < res.size) {
                    res.size = s;
                    res.triples.clear();
                }
                res.triples.push_back({x, y, z, s});
            }
        }
    }
    std::sort(res.triples.begin(), res.triples.end());
    return res;
}

int min_pseudo_median_size(const GenericGraph& g, int u, int v, int w) {
    return pseudo_medians(g, u, v, w).size;
}

bool has_small_pseudo_median(const GenericGraph& g, int u, int v, int r) {
    std::vector<std::vector<int>> d = all_pairs_distances(g);
    require_one_component(d, u, v, r);
    int n = g.vertex_count();
    // size 0: a vertex on shortest paths of all three pairs
    for (int m = 0; m < n; ++m) {
        if (d[m][u] < 0) continue;
        if (d[u][m] + d[m][v] == d[u][v] && d[v][m] + d[m][r] == d[v][r] &&
            d[u][m] + d[m][r] == d[u][r]) {
            return true;
        }
    }
    // size 1: a triangle (x,y,z) satisfying the three path conditions
    for (int x = 0; x < n; ++x) {
        for (int y : g.neighbors(x)) {
            for (int z : g.neighbors(x)) {
                if (z == y || !g.adjacent(y, z)) continue;
                if (on_common_geodesic(d, u, v, x, y) &&
                    on_common_geodesic(d, v, r, y, z) &&
                    on_common_geodesic(d, u, r, x, z)) {
                    return true;
                }
            }
        }
    }
    return false;
}

int quasi_median_size(const Vertex& u, const Vertex& v, const Vertex& w) {
    if (u.size() != v.size() || v.size() != w.size()) {
        throw std::invalid_argument("quasi-median inputs have different arity");
    }
    int count = 0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        count += (u[j] != v[j] && v[j] != w[j] && u[j] != w[j]);
    }
    return count;
}

MedianTriple quasi_median_hamming(const Shape& shape, const Vertex& u,
                                  const Vertex& v, const Vertex& w) {
    shape.require(u);
    shape.require(v);
    shape.require(w);
    MedianTriple t{u, v, w, 0};
    for (int j = 0; j < shape.dim(); ++j) {
        if (u[j] != v[j] && v[j] != w[j] && u[j] != w[j]) {
            ++t.size;
            continue;
        }
        int majority = u[j] == v[j] ? u[j] : (u[j] == w[j] ? u[j] : v[j]);
        t.x[j] = t.y[j] = t.z[j] = majority;
    }
    return t;
}

static TriangleConditionReport triangle_scan(const GenericGraph& g,
                                             const std::vector<int>& apexes) {
    std::vector<std::vector<int>> dist;
    dist.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) dist.push_back(bfs_distances(g, v));
    TriangleConditionReport rep;
    rep.holds = true;
    for (int u : apexes) {
        for (Edge e : g.edges()) {
            int dv = dist[u][e.a];
            int dw = dist[u][e.b];
            if (dv < 2 || dv != dw) continue;
            ++rep.candidates;
            bool found = false;
            for (int x : g.neighbors(e.a)) {
                if (dist[u][x] == dv - 1 && g.adjacent(x, e.b)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                rep.holds = false;
                rep.counterexample = {u, e.a, e.b};
                return rep;
            }
        }
    }
    return rep;
}

TriangleConditionReport triangle_condition(const GenericGraph& g) {
    std::vector<int> apexes(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) apexes[v] = v;
    return triangle_scan(g, apexes);
}

TriangleConditionReport rooted_triangle_condition(const GenericGraph& g, int root) {
    if (root < 0 || root >= g.vertex_count()) {
        throw std::invalid_argument("root " + std::to_string(root) + " is not a vertex");
    }
    return triangle_scan(g, {root});
}

}  // namespace daisy
