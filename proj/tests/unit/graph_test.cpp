#include <doctest.h>

#include <stdexcept>

#include "daisy/labeled_graph.hpp"
#include "daisy/verify.hpp"

using namespace daisy;

TEST_CASE("bfs distances") {
    GenericGraph single(1);
    CHECK(bfs_distances(single, 0) == std::vector<int>{0});

    GenericGraph path = path_graph(3);
    CHECK(bfs_distances(path, 0) == std::vector<int>{0, 1, 2});

    GenericGraph c6 = verify::c6_rooted();
    std::vector<int> dist = bfs_distances(c6, c6.find_label("u"));
    CHECK(dist[verify::c6_root()] == 3);

    CHECK_THROWS_AS(bfs_distances(path, 7), std::invalid_argument);
}

TEST_CASE("graph intervals") {
    GenericGraph path = path_graph(3);
    CHECK(graph_interval(path, 1, 1) == std::vector<int>{1});
    CHECK(graph_interval(path, 0, 2) == std::vector<int>{0, 1, 2});

    GenericGraph c6 = verify::c6_rooted();
    // antipodal pair: every vertex lies on a shortest path
    CHECK(graph_interval(c6, verify::c6_root(), c6.find_label("u")).size() == 6);

    GenericGraph two(2);  // no edges
    CHECK_THROWS_AS(graph_interval(two, 0, 1), std::invalid_argument);
}

TEST_CASE("isometric subgraph checking") {
    Shape q3{{2, 2, 2}};
    CHECK(is_isometric(full_host(q3)).isometric);

    LabeledGraph gap{Shape{{2, 2}}, {{0, 0}, {1, 1}}};
    IsometryReport rep = is_isometric(gap);
    CHECK_FALSE(rep.isometric);
    CHECK(rep.witness == std::make_pair(Vertex{0, 0}, Vertex{1, 1}));
    CHECK(rep.sub_distance == -1);
    CHECK(rep.host_distance == 2);

    LabeledGraph ell{Shape{{2, 2}}, {{1, 0}, {0, 1}, {1, 1}}};
    CHECK(is_isometric(ell).isometric);

    CHECK_THROWS_AS(LabeledGraph(Shape{{2, 2}}, {}), std::invalid_argument);
}

TEST_CASE("is_isometric agrees with the host-subset oracle") {
    for (const Shape& shape : {Shape{{2, 2}}, Shape{{3, 2}}}) {
        LabeledGraph host = full_host(shape);
        GenericGraph generic = host.to_generic();
        int n = host.size();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<Vertex> verts;
            std::vector<int> ids;
            for (int i = 0; i < n; ++i) {
                if (mask >> i & 1) {
                    verts.push_back(host.vertex(i));
                    ids.push_back(i);
                }
            }
            bool direct = is_isometric(LabeledGraph(shape, verts)).isometric;
            bool oracle = isometric_in(generic, ids).isometric;
            CHECK(direct == oracle);
        }
    }
}

TEST_CASE("isometry witness is the lexicographically first failing pair") {
    LabeledGraph g{Shape{{3, 3}}, {{0, 0}, {1, 1}, {2, 2}}};
    IsometryReport rep = is_isometric(g);
    REQUIRE_FALSE(rep.isometric);
    CHECK(rep.witness == std::make_pair(Vertex{0, 0}, Vertex{1, 1}));
}

TEST_CASE("isometric subgraphs have interval containment") {
    Shape shape{{3, 3}};
    LabeledGraph g{shape, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}}};
    REQUIRE(is_isometric(g).isometric);
    for (const Vertex& u : g.vertices()) {
        for (const Vertex& v : g.vertices()) {
            std::vector<Vertex> inner = graph_interval(g, u, v);
            std::vector<Vertex> host = hamming_interval(u, v);
            for (const Vertex& w : inner) {
                CHECK(std::find(host.begin(), host.end(), w) != host.end());
            }
        }
    }
}

TEST_CASE("full host BFS distances equal hamming distances") {
    for (const Shape& shape : verify::shapes_up_to(12)) {
        LabeledGraph host = full_host(shape);
        for (int i = 0; i < host.size(); ++i) {
            std::vector<int> dist = bfs_distances(host, host.vertex(i));
            for (int j = 0; j < host.size(); ++j) {
                CHECK(dist[j] == hamming_distance(host.vertex(i), host.vertex(j)));
            }
        }
    }
}

TEST_CASE("edges share clique") {
    GenericGraph k3 = complete_graph(3);
    CHECK(edges_share_clique(k3, Edge(0, 1), Edge(0, 1)));
    CHECK(edges_share_clique(k3, Edge(0, 1), Edge(1, 2)));

    GenericGraph c4 = cycle_graph(4);
    CHECK_FALSE(edges_share_clique(c4, Edge(0, 1), Edge(2, 3)));
    CHECK_FALSE(edges_share_clique(c4, Edge(0, 1), Edge(1, 2)));
    CHECK_THROWS_AS(edges_share_clique(c4, Edge(0, 2), Edge(0, 1)),
                    std::invalid_argument);

    // symmetry over all edge pairs
    for (Edge e : c4.edges()) {
        for (Edge f : c4.edges()) {
            CHECK(edges_share_clique(c4, e, f) == edges_share_clique(c4, f, e));
        }
    }
}

TEST_CASE("generic graph basics") {
    GenericGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 1);  // duplicate ignored
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    g.set_label(2, "z");
    CHECK(g.find_label("z") == 2);
    CHECK(g.find_label("w") == -1);
    CHECK(g.display(0) == "0");
    CHECK(g.display(2) == "z");
}
