#include <doctest.h>

#include <stdexcept>

#include <set>

#include "daisy/daisy_graph.hpp"
#include "daisy/verify.hpp"

using namespace daisy;

namespace {

// Subset-filter oracle: downward-closed vertex sets containing the root,
// found by brute force over all subsets.
long long count_daisy_sets_by_filter(const Shape& shape, const Vertex& root) {
    std::vector<Vertex> verts = enumerate_vertices(shape);
    int n = static_cast<int>(verts.size());
    long long count = 0;
    for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
        std::vector<Vertex> set;
        for (int i = 0; i < n; ++i) {
            if (mask >> i & 1) set.push_back(verts[i]);
        }
        if (is_daisy(shape, set, root).is_daisy) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("build_daisy basics") {
    Shape q3{{2, 2, 2}};
    Vertex zero = q3.zero();

    DaisyGraph trivial = build_daisy(q3, zero, {zero});
    CHECK(trivial.graph.vertices() == std::vector<Vertex>{zero});
    CHECK(trivial.generators == std::vector<Vertex>{zero});

    DaisyGraph d = build_daisy(q3, zero, {{1, 1, 0}, {0, 1, 1}});
    CHECK(d.graph.vertices() ==
          std::vector<Vertex>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                              {1, 0, 0}, {1, 1, 0}});
    CHECK(d.generators == std::vector<Vertex>{{0, 1, 1}, {1, 1, 0}});
    CHECK(d.input_generators == std::vector<Vertex>{{1, 1, 0}, {0, 1, 1}});

    CHECK_THROWS_AS(build_daisy(q3, zero, {}), std::invalid_argument);
}

TEST_CASE("generic-host daisy graphs: the rooted six-cycle") {
    GenericGraph c6 = verify::c6_rooted();
    int r = verify::c6_root();
    int u = c6.find_label("u");
    std::vector<int> whole = build_daisy(c6, r, {u});
    CHECK(whole.size() == 6);

    long long count = 0;
    for_each_daisy_set(c6, r, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    CHECK(count == 10);

    // subset-filter oracle
    long long filtered = 0;
    for (unsigned mask = 1; mask < (1u << 6); ++mask) {
        std::vector<int> set;
        for (int i = 0; i < 6; ++i) {
            if (mask >> i & 1) set.push_back(i);
        }
        if (is_daisy(c6, set, r).is_daisy) ++filtered;
    }
    CHECK(filtered == count);
}

TEST_CASE("is_daisy recognition") {
    Shape s33{{3, 3}};
    Vertex zero = s33.zero();
    CHECK(is_daisy(s33, {zero}, zero).is_daisy);

    DaisyCheck bad = is_daisy(s33, {{0, 0}, {1, 2}}, zero);
    CHECK_FALSE(bad.is_daisy);
    CHECK(bad.witness == Vertex{1, 2});

    DaisyCheck rootless = is_daisy(s33, {{1, 0}}, zero);
    CHECK_FALSE(rootless.is_daisy);
    CHECK(rootless.witness == zero);

    // every interval to the root is downward closed
    for (const Vertex& v : enumerate_vertices(s33)) {
        CHECK(is_daisy(s33, hamming_interval(zero, v), zero).is_daisy);
    }
}

TEST_CASE("minimal generators") {
    Shape q3{{2, 2, 2}};
    Vertex zero = q3.zero();
    CHECK(minimal_generators({zero}, zero) == std::vector<Vertex>{zero});

    DaisyGraph d = build_daisy(q3, zero, {{1, 1, 0}, {0, 1, 1}});
    CHECK(minimal_generators(d.graph.vertices(), zero) ==
          std::vector<Vertex>{{0, 1, 1}, {1, 1, 0}});

    std::vector<Vertex> interval = hamming_interval(zero, {1, 0, 1});
    CHECK(minimal_generators(interval, zero) == std::vector<Vertex>{{1, 0, 1}});
}

TEST_CASE("regeneration from minimal generators is the identity") {
    for (const Shape& shape : {Shape{{2, 2}}, Shape{{3, 2}}, Shape{{3, 3}},
                               Shape{{2, 2, 2}}}) {
        Vertex zero = shape.zero();
        for_each_daisy_graph(shape, zero, [&](const std::vector<Vertex>& members) {
            std::vector<Vertex> gens = minimal_generators(members, zero);
            DaisyGraph rebuilt = build_daisy(shape, zero, gens);
            CHECK(rebuilt.graph.vertices() == members);
            // generators form an antichain: no member below another
            for (const Vertex& a : gens) {
                for (const Vertex& b : gens) {
                    if (a != b) {
                        bool below = true;
                        for (std::size_t j = 0; j < a.size(); ++j) {
                            if (a[j] != 0 && a[j] != b[j]) below = false;
                        }
                        CHECK_FALSE(below);
                    }
                }
            }
            return true;
        });
    }
}

TEST_CASE("daisy enumeration counts") {
    auto count = [](const Shape& shape) {
        long long n = 0;
        for_each_daisy_graph(shape, shape.zero(), [&](const std::vector<Vertex>&) {
            ++n;
            return true;
        });
        return n;
    };
    CHECK(count(Shape{{2}}) == 2);
    CHECK(count(Shape{{3}}) == 4);
    CHECK(count(Shape{{2, 2}}) == 5);

    for (const Shape& shape : {Shape{{2, 2}}, Shape{{3, 2}}, Shape{{2, 3}},
                               Shape{{3, 3}}, Shape{{2, 2, 2}}, Shape{{2, 2, 3}}}) {
        CHECK(count(shape) == count_daisy_sets_by_filter(shape, shape.zero()));
    }
}

TEST_CASE("daisy enumeration is downward closed and budget guarded") {
    Shape shape{{3, 3}};
    Vertex zero = shape.zero();
    for_each_daisy_graph(shape, zero, [&](const std::vector<Vertex>& members) {
        for (const Vertex& v : members) {
            for (const Vertex& w : hamming_interval(zero, v)) {
                CHECK(std::binary_search(members.begin(), members.end(), w));
            }
        }
        return true;
    });
    CHECK_THROWS_AS(enumerate_daisy_graphs(Shape{{3, 3, 3}}, Vertex{0, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("canonical minimal host") {
    Shape s33{{3, 3}};
    Vertex zero = s33.zero();

    DaisyGraph full = daisy_from_vertices(s33, zero, enumerate_vertices(s33));
    MinimalHostResult id = canonical_minimal_host(full);
    CHECK(id.identity);
    CHECK(id.canonical.graph.shape() == s33);

    DaisyGraph line = daisy_from_vertices(s33, zero, {{0, 0}, {2, 0}});
    MinimalHostResult res = canonical_minimal_host(line);
    CHECK_FALSE(res.identity);
    CHECK(res.canonical.graph.shape() == Shape{{2}});
    CHECK(res.canonical.graph.vertices() == std::vector<Vertex>{{0}, {1}});
    CHECK(res.kept_coords == std::vector<int>{0});
    CHECK(res.map_vertex({2, 0}) == Vertex{1});

    DaisyGraph point = daisy_from_vertices(Shape{{2, 2}}, {0, 0}, {{0, 0}});
    CHECK(canonical_minimal_host(point).canonical.graph.shape() == Shape{});
}

TEST_CASE("canonicalization preserves adjacency and distances") {
    Shape shape{{3, 3}};
    Vertex zero = shape.zero();
    for_each_daisy_graph(shape, zero, [&](const std::vector<Vertex>& members) {
        DaisyGraph d = daisy_from_vertices(shape, zero, members);
        MinimalHostResult res = canonical_minimal_host(d);
        const LabeledGraph& a = d.graph;
        const LabeledGraph& b = res.canonical.graph;
        REQUIRE(a.size() == b.size());
        for (int i = 0; i < a.size(); ++i) {
            std::vector<int> da = bfs_distances(a, a.vertex(i));
            std::vector<int> db = bfs_distances(b, res.map_vertex(a.vertex(i)));
            for (int j = 0; j < a.size(); ++j) {
                int jb = b.index_of(res.map_vertex(a.vertex(j)));
                REQUIRE(jb >= 0);
                CHECK(da[j] == db[jb]);
            }
        }
        return true;
    });
}

TEST_CASE("daisy cube word of a singleton") {
    Shape s33{{3, 3}};
    DaisyGraph root_only = build_daisy(s33, s33.zero(), {s33.zero()});
    CHECK(daisy_cube_of_singleton(root_only) == std::vector<int>{0, 0});

    DaisyGraph d = build_daisy(s33, s33.zero(), {{2, 0}});
    CHECK(daisy_cube_of_singleton(d) == std::vector<int>{1, 0});

    Shape s324{{3, 2, 4}};
    DaisyGraph e = build_daisy(s324, s324.zero(), {{2, 1, 3}});
    CHECK(daisy_cube_of_singleton(e) == std::vector<int>{1, 1, 1});

    DaisyGraph pair = build_daisy(s33, s33.zero(), {{1, 0}, {0, 1}});
    CHECK_THROWS_AS(daisy_cube_of_singleton(pair), std::invalid_argument);
}
