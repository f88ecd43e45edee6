#include <doctest.h>

#include "daisy/document.hpp"
#include "daisy/verify.hpp"

using namespace daisy;

TEST_CASE("labeled document round trip") {
    DaisyGraph d = build_daisy(Shape{{2, 2, 2}}, {0, 0, 0}, {{1, 1, 0}, {0, 1, 1}});
    GraphDocument doc = GraphDocument::from(d);
    doc.notes.push_back("example graph");
    std::string text = serialize(doc);
    GraphDocument parsed = parse_document(text);
    CHECK(serialize(parsed) == text);
    CHECK(parsed.notes == std::vector<std::string>{"example graph"});
    CHECK(parsed.to_daisy().graph.vertices() == d.graph.vertices());
}

TEST_CASE("one-vertex document uses the dash tuple") {
    DaisyGraph k1 = daisy_from_vertices(Shape{}, Vertex{}, {Vertex{}});
    std::string text = serialize(GraphDocument::from(k1));
    CHECK(text.find("shape -") != std::string::npos);
    CHECK(text.find("root -") != std::string::npos);
    GraphDocument parsed = parse_document(text);
    CHECK(parsed.to_labeled().size() == 1);
}

TEST_CASE("generic document round trip") {
    GraphDocument doc = GraphDocument::from(verify::c6_rooted(), verify::c6_root());
    std::string text = serialize(doc);
    GraphDocument parsed = parse_document(text);
    CHECK(serialize(parsed) == text);
    GenericGraph g = parsed.to_generic();
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(parsed.generic_root(g) == g.find_label("r"));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_document("nonsense\n"),
                         doctest::Contains("line 1"), ParseError);

    std::string bad_tuple =
        "daisygraph 1\nkind labeled\nshape 2,2\nroot 0,0\nvertices 1\n0,7\n";
    CHECK_THROWS_WITH_AS(parse_document(bad_tuple), doctest::Contains("line 6"),
                         ParseError);

    std::string no_vertices =
        "daisygraph 1\nkind labeled\nshape 2,2\nroot 0,0\nvertices 0\n";
    CHECK_THROWS_AS(parse_document(no_vertices), ParseError);

    std::string truncated = "daisygraph 1\nkind generic\nroot a\nvertices 2\na\n";
    CHECK_THROWS_AS(parse_document(truncated), ParseError);
}

TEST_CASE("comments and blank lines are tolerated") {
    std::string text =
        "# a comment\ndaisygraph 1\n\nkind labeled\nshape 2\nroot 0\n"
        "vertices 2\n0\n1\n";
    GraphDocument doc = parse_document(text);
    CHECK(doc.to_labeled().size() == 2);
}

TEST_CASE("script round trip and replay") {
    DaisyGraph d = build_daisy(Shape{{2, 2, 2}}, {0, 0, 0}, {{1, 1, 0}, {0, 1, 1}});
    Decomposition dec = decompose_to_k1(d);
    std::string text = serialize(dec);
    Decomposition parsed = parse_script(text);
    CHECK(serialize(parsed) == text);
    CHECK(replay(parsed).graph.vertices() == d.graph.vertices());

    CHECK_THROWS_AS(parse_script("daisyscript 2\n"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_script("daisyscript 1\nshape 2\nroot 0\nsteps 1\nstep 1 coord 0 "
                     "values 2\n"),
        doctest::Contains("out of order"), ParseError);
}

TEST_CASE("dot export") {
    DaisyGraph d = build_daisy(Shape{{2, 2}}, {0, 0}, {{1, 0}, {0, 1}});
    std::string dot = to_dot(d.graph, d.root);
    CHECK(dot.find("graph daisy {") != std::string::npos);
    CHECK(dot.find("\"0,0\" [style=filled]") != std::string::npos);
    CHECK(dot.find("\"0,0\" -- \"1,0\"") != std::string::npos);
    CHECK(dot.find("edge class") != std::string::npos);

    std::string generic = to_dot(verify::c6_rooted());
    CHECK(generic.find("\"u\" -- \"x1\"") != std::string::npos);
}
