#include <doctest.h>

#include <stdexcept>

#include "daisy/expansion.hpp"
#include "daisy/verify.hpp"

using namespace daisy;

namespace {

DaisyGraph full_daisy(const Shape& shape) {
    return daisy_from_vertices(shape, shape.zero(), enumerate_vertices(shape));
}

}  // namespace

TEST_CASE("cover validation") {
    GenericGraph k1(1);
    CoverValidation ok = validate_cover(k1, {{0}, {0}});
    CHECK(ok.valid());

    GenericGraph k2 = complete_graph(2);
    CoverValidation bad = validate_cover(k2, {{0}, {1}});
    CHECK_FALSE(bad.intersections_ok);
    CHECK_FALSE(bad.no_cross_edges);
    CHECK_FALSE(bad.valid());
    CHECK_FALSE(bad.witness().empty());
    CHECK_FALSE(bad.intersections_witness.empty());
    CHECK_FALSE(bad.cross_edge_witness.empty());

    GenericGraph p3 = path_graph(3);
    CHECK(validate_cover(p3, {{0, 1}, {1, 2}}).valid());

    // a disconnected cover fails the isometry condition
    GenericGraph p4 = path_graph(4);
    CoverValidation gap = validate_cover(p4, {{0, 1, 2, 3}, {0, 3}});
    CHECK_FALSE(gap.isometric_ok);
}

TEST_CASE("general expansion") {
    GenericGraph k1(1);
    ExpansionResult k2 = expand(k1, {{0}, {0}});
    CHECK(k2.graph.vertex_count() == 2);
    CHECK(k2.graph.edge_count() == 1);

    GenericGraph base2 = complete_graph(2);
    ExpansionResult c4 = expand(base2, {{0, 1}, {0, 1}});
    CHECK(c4.graph.vertex_count() == 4);
    CHECK(c4.graph.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.graph.neighbors(v).size() == 2);
    // only same-index cross edges: a@0 and b@1 must not be adjacent
    for (std::size_t p = 0; p < c4.origin.size(); ++p) {
        for (std::size_t q = p + 1; q < c4.origin.size(); ++q) {
            auto [x, i] = c4.origin[p];
            auto [y, j] = c4.origin[q];
            if (x != y && i != j) {
                CHECK_FALSE(c4.graph.adjacent(static_cast<int>(p),
                                              static_cast<int>(q)));
            }
        }
    }

    GenericGraph p3 = path_graph(3);
    ExpansionResult p4 = expand(p3, {{0, 1}, {1, 2}});
    CHECK(p4.graph.vertex_count() == 4);
    CHECK(p4.graph.edge_count() == 3);
    int degree_one = 0;
    for (int v = 0; v < 4; ++v) {
        if (p4.graph.neighbors(v).size() == 1) ++degree_one;
    }
    CHECK(degree_one == 2);  // a path

    // vertex count formula
    long long total = 0;
    for (const auto& s : {std::vector<int>{0, 1}, std::vector<int>{1, 2}}) {
        total += static_cast<long long>(s.size());
    }
    CHECK(p4.graph.vertex_count() == total);

    CHECK_THROWS_WITH_AS(expand(base2, {{0}, {1}}),
                         doctest::Contains("condition 1"), std::invalid_argument);
}

TEST_CASE("daisy peripheral expansion") {
    DaisyGraph k1 = daisy_from_vertices(Shape{}, Vertex{}, {Vertex{}});
    DaisyGraph k2 = daisy_peripheral_expand(k1, {k1.graph.vertices(),
                                                 k1.graph.vertices()});
    CHECK(k2.graph.shape() == Shape{{2}});
    CHECK(k2.graph.vertices() == std::vector<Vertex>{{0}, {1}});

    DaisyGraph base = full_daisy(Shape{{2}});
    DaisyGraph p3 = daisy_peripheral_expand(base, {base.graph.vertices(), {{0}}});
    CHECK(p3.graph.shape() == Shape{{2, 2}});
    CHECK(p3.graph.vertices() == std::vector<Vertex>{{0, 0}, {0, 1}, {1, 0}});

    DaisyGraph wide = daisy_peripheral_expand(
        base, {base.graph.vertices(), base.graph.vertices(), base.graph.vertices()});
    CHECK(wide.graph.shape() == Shape{{3, 2}});
    CHECK(wide.graph.size() == 6);
}

TEST_CASE("daisy peripheral expansion names the violated clause") {
    DaisyGraph q2 = full_daisy(Shape{{2, 2}});

    CHECK_THROWS_WITH_AS(
        daisy_peripheral_expand(q2, {{Vertex{0, 0}}, q2.graph.vertices()}),
        doctest::Contains("peripheral clause"), std::invalid_argument);

    CHECK_THROWS_WITH_AS(
        daisy_peripheral_expand(q2, {q2.graph.vertices(),
                                     {Vertex{0, 0}, Vertex{1, 1}}}),
        doctest::Contains("daisy clause"), std::invalid_argument);

    // two daisy covers with an edge between their differences (needs a
    // factor of size three)
    DaisyGraph k3 = full_daisy(Shape{{3}});
    CHECK_THROWS_WITH_AS(
        daisy_peripheral_expand(k3, {k3.graph.vertices(),
                                     {Vertex{0}, Vertex{1}},
                                     {Vertex{0}, Vertex{2}}}),
        doctest::Contains("condition 3"), std::invalid_argument);

    // a daisy cover that is not isometric
    DaisyGraph host33 = full_daisy(Shape{{3, 3}});
    DaisyGraph bent = build_daisy(Shape{{3, 3}}, {0, 0}, {{1, 1}, {2, 2}});
    CHECK_THROWS_WITH_AS(
        daisy_peripheral_expand(host33, {host33.graph.vertices(),
                                         bent.graph.vertices()}),
        doctest::Contains("condition 4"), std::invalid_argument);
}

TEST_CASE("contraction") {
    ContractionResult full = contract(full_daisy(Shape{{2, 2}}), 0);
    CHECK(full.graph.graph.shape() == Shape{{2}});
    CHECK(full.covers ==
          std::vector<std::vector<Vertex>>{{{0}, {1}}, {{0}, {1}}});

    DaisyGraph p3 = daisy_from_vertices(Shape{{2, 2}}, {0, 0},
                                        {{0, 0}, {0, 1}, {1, 0}});
    ContractionResult cp3 = contract(p3, 0);
    CHECK(cp3.graph.graph.vertices() == std::vector<Vertex>{{0}, {1}});
    CHECK(cp3.covers == std::vector<std::vector<Vertex>>{{{0}, {1}}, {{0}}});

    ContractionResult k3 = contract(full_daisy(Shape{{3}}), 0);
    CHECK(k3.graph.graph.shape() == Shape{});
    CHECK(k3.covers ==
          std::vector<std::vector<Vertex>>{{Vertex{}}, {Vertex{}}, {Vertex{}}});

    CHECK_THROWS_AS(contract(p3, 2), std::invalid_argument);
    DaisyGraph thin = daisy_from_vertices(Shape{{2, 2}}, {0, 0}, {{0, 0}, {1, 0}});
    CHECK_THROWS_WITH_AS(contract(thin, 1), doctest::Contains("not minimal"),
                         std::invalid_argument);
}

TEST_CASE("round trip over small families") {
    for (const Shape& shape : {Shape{{2, 2}}, Shape{{3, 2}}, Shape{{2, 2, 2}}}) {
        for (const DaisyGraph& d : verify::isometric_minimal_daisy_graphs(shape)) {
            for (int j = 0; j < shape.dim(); ++j) {
                ContractionResult c = contract(d, j);
                DaisyGraph re = daisy_peripheral_expand_at(c.graph, c.covers, j);
                CHECK(re.graph.vertices() == d.graph.vertices());
                CHECK(re.graph.shape() == shape);
            }
        }
    }
}

TEST_CASE("decomposition and replay") {
    DaisyGraph k1 = daisy_from_vertices(Shape{}, Vertex{}, {Vertex{}});
    CHECK(decompose_to_k1(k1).steps.empty());

    DaisyGraph p3 = daisy_from_vertices(Shape{{2, 2}}, {0, 0},
                                        {{0, 0}, {0, 1}, {1, 0}});
    Decomposition dec = decompose_to_k1(p3);
    CHECK(dec.steps.size() == 2);
    CHECK(replay(dec).graph.vertices() == p3.graph.vertices());

    Decomposition full = decompose_to_k1(full_daisy(Shape{{3, 3}}));
    CHECK(full.steps.size() == 2);
    for (const DecomposeStep& step : full.steps) {
        // full hosts contract to full hosts: every cover is the whole stage
        for (std::size_t l = 1; l < step.covers.size(); ++l) {
            CHECK(step.covers[l] == step.covers[0]);
        }
    }
}

TEST_CASE("generic clique contraction") {
    DaisyGraph q2 = full_daisy(Shape{{2, 2}});
    GenericGraph g = q2.graph.to_generic();
    int v00 = q2.graph.index_of({0, 0});
    int v10 = q2.graph.index_of({1, 0});
    GenericContraction gc = contract_generic(g, Edge(v00, v10));
    CHECK(gc.graph.vertex_count() == 2);
    CHECK(gc.graph.edge_count() == 1);
    CHECK(gc.fibers.size() == 2);

    // the diamond is not a partial Hamming graph: its single delta class
    // spans a non-clique
    GenericGraph diamond(4);
    diamond.add_edge(0, 1);
    diamond.add_edge(0, 2);
    diamond.add_edge(1, 2);
    diamond.add_edge(1, 3);
    diamond.add_edge(2, 3);
    CHECK_THROWS_AS(contract_generic(diamond, Edge(0, 1)), std::runtime_error);
}

TEST_CASE("expansion characterization on a slightly larger host") {
    // forward and backward through two coordinates of mixed size
    DaisyGraph d = build_daisy(Shape{{3, 2}}, {0, 0}, {{2, 1}, {1, 0}});
    Decomposition dec = decompose_to_k1(d);
    CHECK(dec.steps.size() == 2);
    DaisyGraph rebuilt = replay(dec);
    CHECK(rebuilt.graph.vertices() == d.graph.vertices());
    CHECK(rebuilt.graph.shape() == d.graph.shape());
}
