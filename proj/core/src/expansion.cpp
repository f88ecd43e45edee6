#include "daisy/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "daisy/relations.hpp"

namespace daisy {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_intersects(const std::vector<int>& a, const std::vector<int>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return true;
    }
    return false;
}

}  // namespace

std::string CoverValidation::witness() const {
    for (const std::string* w : {&intersections_witness, &union_witness,
                                 &cross_edge_witness, &isometric_witness}) {
        if (!w->empty()) return *w;
    }
    return "";
}

CoverValidation validate_cover(const GenericGraph& base,
                               const std::vector<std::vector<int>>& sets) {
    CoverValidation v;
    if (sets.empty()) {
        v.union_ok = base.vertex_count() == 0;
        v.intersections_ok = false;
        v.intersections_witness = "no covering sets given";
        return v;
    }
    std::vector<std::vector<int>> w;
    w.reserve(sets.size());
    for (const auto& s : sets) {
        for (int x : s) {
            if (x < 0 || x >= base.vertex_count()) {
                throw std::invalid_argument("cover member " + std::to_string(x) +
                                            " is not a vertex of the base graph");
            }
        }
        w.push_back(sorted_unique(s));
    }
    std::size_t m = w.size();

    for (std::size_t i = 0; i < m && v.intersections_ok; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            if (i == j ? w[i].empty() : !set_intersects(w[i], w[j])) {
                v.intersections_ok = false;
                v.intersections_witness = "condition 1: covers " + std::to_string(i) +
                                          " and " + std::to_string(j) +
                                          " do not intersect";
                break;
            }
        }
    }

    std::vector<int> covered;
    for (const auto& s : w) covered = set_union(covered, s);
    if (static_cast<int>(covered.size()) != base.vertex_count()) {
        for (int x = 0; x < base.vertex_count(); ++x) {
            if (!std::binary_search(covered.begin(), covered.end(), x)) {
                v.union_ok = false;
                v.union_witness =
                    "condition 2: vertex " + base.display(x) + " is not covered";
                break;
            }
        }
    }

    for (std::size_t i = 0; i < m && v.no_cross_edges; ++i) {
        for (std::size_t j = i + 1; j < m && v.no_cross_edges; ++j) {
            std::vector<int> only_i = set_difference(w[i], w[j]);
            std::vector<int> only_j = set_difference(w[j], w[i]);
            for (int a : only_i) {
                for (int b : only_j) {
                    if (base.adjacent(a, b)) {
                        v.no_cross_edges = false;
                        v.cross_edge_witness =
                            "condition 3: edge " + base.display(a) + "-" +
                            base.display(b) + " joins covers " + std::to_string(i) +
                            " and " + std::to_string(j);
                        break;
                    }
                }
                if (!v.no_cross_edges) break;
            }
        }
    }

    for (std::size_t i = 0; i < m && v.isometric_ok; ++i) {
        if (w[i].empty()) continue;  // already reported under condition 1
        SubsetIsometry rep = isometric_in(base, w[i]);
        if (!rep.isometric) {
            v.isometric_ok = false;
            v.isometric_witness = "condition 4: cover " + std::to_string(i) +
                                  " is not isometric in the base (pair " +
                                  base.display(rep.witness->first) + "," +
                                  base.display(rep.witness->second) + ")";
            break;
        }
        for (std::size_t j = i + 1; j < m; ++j) {
            SubsetIsometry urep = isometric_in(base, set_union(w[i], w[j]));
            if (!urep.isometric) {
                v.isometric_ok = false;
                v.isometric_witness =
                    "condition 4: union of covers " + std::to_string(i) + " and " +
                    std::to_string(j) + " is not isometric in the base (pair " +
                    base.display(urep.witness->first) + "," +
                    base.display(urep.witness->second) + ")";
                break;
            }
        }
    }
    return v;
}

ExpansionResult expand(const GenericGraph& base,
                       const std::vector<std::vector<int>>& sets) {
    CoverValidation val = validate_cover(base, sets);
    if (!val.valid()) {
        throw std::invalid_argument("invalid cover family: " + val.witness());
    }
    std::vector<std::vector<int>> w;
    w.reserve(sets.size());
    for (const auto& s : sets) w.push_back(sorted_unique(s));

    ExpansionResult res;
    for (int x = 0; x < base.vertex_count(); ++x) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (std::binary_search(w[i].begin(), w[i].end(), x)) {
                res.origin.emplace_back(x, static_cast<int>(i));
            }
        }
    }
    res.graph = GenericGraph(static_cast<int>(res.origin.size()));
    for (std::size_t p = 0; p < res.origin.size(); ++p) {
        res.graph.set_label(static_cast<int>(p),
                            base.display(res.origin[p].first) + "@" +
                                std::to_string(res.origin[p].second));
    }
    for (std::size_t p = 0; p < res.origin.size(); ++p) {
        for (std::size_t q = p + 1; q < res.origin.size(); ++q) {
            auto [x, i] = res.origin[p];
            auto [y, j] = res.origin[q];
            bool edge = (x == y) ||  // the clique replacing x
                        (i == j && base.adjacent(x, y));
            if (edge) res.graph.add_edge(static_cast<int>(p), static_cast<int>(q));
        }
    }
    return res;
}

namespace {

void require_zero_root(const DaisyGraph& g, const char* what) {
    if (g.root != g.graph.shape().zero()) {
        throw std::invalid_argument(std::string(what) + " requires root 0^n");
    }
}

std::vector<Vertex> sorted_vertex_set(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

DaisyGraph daisy_peripheral_expand_at(const DaisyGraph& g,
                                      const std::vector<std::vector<Vertex>>& covers,
                                      int position) {
    require_zero_root(g, "daisy peripheral expansion");
    const Shape& shape = g.graph.shape();
    if (position < 0 || position > shape.dim()) {
        throw std::invalid_argument("insertion position out of range");
    }
    if (covers.size() < 2) {
        throw std::invalid_argument(
            "daisy peripheral expansion needs at least two covers");
    }
    std::vector<std::vector<Vertex>> w;
    w.reserve(covers.size());
    for (const auto& c : covers) w.push_back(sorted_vertex_set(c));

    // peripheral clause: the first cover is the whole graph
    if (w[0] != g.graph.vertices()) {
        throw std::invalid_argument(
            "peripheral clause violated: cover 0 must be the full vertex set");
    }
    // daisy clause: every cover induces a daisy graph of the host
    for (std::size_t l = 0; l < w.size(); ++l) {
        for (const Vertex& x : w[l]) {
            if (!g.graph.contains(x)) {
                throw std::invalid_argument("cover " + std::to_string(l) +
                                            " contains " + format_vertex(x) +
                                            ", which is not a vertex of the base");
            }
        }
        DaisyCheck chk = is_daisy(shape, w[l], g.root);
        if (!chk.is_daisy) {
            throw std::invalid_argument(
                "daisy clause violated: cover " + std::to_string(l) +
                " is not a daisy graph of the host (witness " +
                format_vertex(*chk.witness) + ")");
        }
    }
    // the four cover conditions, in the base graph's own metric
    std::vector<std::vector<int>> id_sets;
    id_sets.reserve(w.size());
    for (const auto& c : w) {
        std::vector<int> ids;
        ids.reserve(c.size());
        for (const Vertex& x : c) ids.push_back(g.graph.index_of(x));
        id_sets.push_back(std::move(ids));
    }
    CoverValidation val = validate_cover(g.graph.to_generic(), id_sets);
    if (!val.valid()) {
        throw std::invalid_argument("cover validity violated: " + val.witness());
    }

    std::vector<int> factors = shape.factors();
    factors.insert(factors.begin() + position, static_cast<int>(w.size()));
    Shape new_shape{factors};
    std::vector<Vertex> verts;
    for (std::size_t l = 0; l < w.size(); ++l) {
        for (const Vertex& x : w[l]) {
            Vertex v = x;
            v.insert(v.begin() + position, static_cast<int>(l));
            verts.push_back(std::move(v));
        }
    }
    return daisy_from_vertices(new_shape, new_shape.zero(), std::move(verts));
}

DaisyGraph daisy_peripheral_expand(const DaisyGraph& g,
                                   const std::vector<std::vector<Vertex>>& covers) {
    return daisy_peripheral_expand_at(g, covers, 0);
}

ContractionResult contract(const DaisyGraph& g, int coord) {
    require_zero_root(g, "contraction");
    const Shape& shape = g.graph.shape();
    int k = shape.factor(coord);  // throws when coord is out of range

    std::vector<std::vector<Vertex>> level_images(k);
    std::vector<Vertex> projected;
    for (const Vertex& v : g.graph.vertices()) {
        Vertex w = v;
        w.erase(w.begin() + coord);
        level_images[v[coord]].push_back(w);
        projected.push_back(std::move(w));
    }
    for (int value = 0; value < k; ++value) {
        if (level_images[value].empty()) {
            throw std::invalid_argument(
                "value " + std::to_string(value) + " of coordinate " +
                std::to_string(coord) +
                " is unused; the host is not minimal in that coordinate");
        }
        level_images[value] = sorted_vertex_set(std::move(level_images[value]));
    }
    std::vector<int> factors = shape.factors();
    factors.erase(factors.begin() + coord);
    Shape new_shape{factors};
    DaisyGraph base =
        daisy_from_vertices(new_shape, new_shape.zero(), sorted_vertex_set(projected));
    return {std::move(base), coord, std::move(level_images)};
}

Decomposition decompose_to_k1(const DaisyGraph& g) {
    require_zero_root(g, "decomposition");
    Decomposition dec{g.graph.shape(), g.root, {}};
    DaisyGraph current = g;
    while (current.graph.shape().dim() > 0) {
        DaisyCheck chk =
            is_daisy(current.graph.shape(), current.graph.vertices(), current.root);
        if (!chk.is_daisy) {
            throw std::runtime_error(
                "decomposition reached a non-daisy intermediate (witness " +
                format_vertex(*chk.witness) + ")");
        }
        IsometryReport iso = is_isometric(current.graph);
        if (!iso.isometric) {
            throw std::runtime_error(
                "decomposition reached a non-isometric intermediate (pair " +
                format_vertex(iso.witness->first) + " / " +
                format_vertex(iso.witness->second) + ")");
        }
        if (!is_minimal_host(current)) {
            throw std::runtime_error(
                "decomposition reached an intermediate whose host is not minimal");
        }
        int coord = current.graph.shape().dim() - 1;
        ContractionResult step = contract(current, coord);
        dec.steps.push_back({coord, step.covers});
        current = std::move(step.graph);
    }
    return dec;
}

DaisyGraph replay(const Decomposition& dec) {
    DaisyGraph current = daisy_from_vertices(Shape{}, Vertex{}, {Vertex{}});
    for (auto it = dec.steps.rbegin(); it != dec.steps.rend(); ++it) {
        current = daisy_peripheral_expand_at(current, it->covers, it->coord);
    }
    if (current.graph.shape() != dec.shape || current.root != dec.root) {
        throw std::runtime_error("replay produced a graph on an unexpected host");
    }
    return current;
}

GenericContraction contract_generic(const GenericGraph& g, Edge e) {
    std::vector<EdgeClass> classes = delta_classes(g);
    const EdgeClass* cls = nullptr;
    for (const EdgeClass& c : classes) {
        if (std::binary_search(c.edges.begin(), c.edges.end(), e)) {
            cls = &c;
            break;
        }
    }
    if (!cls) {
        throw std::invalid_argument("pair " + g.display(e.a) + "-" + g.display(e.b) +
                                    " is not an edge");
    }
    // components of the class edges; each must induce a clique
    std::vector<int> comp(g.vertex_count());
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int a) {
        while (comp[a] != a) a = comp[a] = comp[comp[a]];
        return a;
    };
    for (const Edge& f : cls->edges) comp[find(f.a)] = find(f.b);

    GenericContraction res;
    std::vector<int> quotient_of(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int r = find(v);
        if (quotient_of[r] < 0) {
            quotient_of[r] = res.graph.add_vertex();
            res.fibers.emplace_back();
        }
        quotient_of[v] = quotient_of[r];
        res.fibers[quotient_of[v]].push_back(v);
    }
    for (const auto& fiber : res.fibers) {
        for (std::size_t i = 0; i < fiber.size(); ++i) {
            for (std::size_t j = i + 1; j < fiber.size(); ++j) {
                if (!g.adjacent(fiber[i], fiber[j])) {
                    throw std::runtime_error(
                        "delta class spans a non-clique; the graph is not a partial "
                        "Hamming graph");
                }
            }
        }
    }
    for (Edge f : g.edges()) {
        int qa = quotient_of[f.a];
        int qb = quotient_of[f.b];
        if (qa == qb) {
            // an intra-fiber edge outside the contracted class would make the
            // quotient ill-defined
            if (!std::binary_search(cls->edges.begin(), cls->edges.end(), f)) {
                throw std::runtime_error(
                    "edge inside a contracted clique does not belong to the "
                    "contracted delta class");
            }
            continue;
        }
        res.graph.add_edge(qa, qb);
    }
    for (std::size_t q = 0; q < res.fibers.size(); ++q) {
        std::string label;
        for (int v : res.fibers[q]) {
            if (!label.empty()) label += "+";
            label += g.display(v);
        }
        res.graph.set_label(static_cast<int>(q), label);
    }
    return res;
}

}  // namespace daisy
