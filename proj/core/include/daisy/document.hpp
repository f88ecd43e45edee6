#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "daisy/expansion.hpp"
#include "daisy/relations.hpp"

namespace daisy {

// Versioned text document for a graph. Labeled documents carry a shape and
// coordinate tuples and omit the edge list (adjacency is induced); generic
// documents carry opaque ids and an explicit edge list. Serialization is
// canonical (sorted vertices and edges), so serialize(parse(serialize(x)))
// equals serialize(x) byte for byte.
//
//   daisygraph 1
//   kind labeled
//   shape 2,2,2          ("-" for the empty shape)
//   root 0,0,0
//   vertices 6
//   0,0,0
//   ...
//   note free text       (optional, repeatable)
//
// Generic documents replace shape with nothing, use ids for root/vertices
// and add an "edges <count>" block of "id id" lines. Blank lines and lines
// starting with '#' are ignored when parsing.
struct GraphDocument {
    int version = 1;
    bool labeled = true;
    std::optional<Shape> shape;         // labeled only
    std::string root;                    // formatted tuple or id
    std::vector<std::string> vertices;   // formatted tuples or ids
    std::vector<std::pair<std::string, std::string>> edges;  // generic only
    std::vector<std::string> notes;

    static GraphDocument from(const DaisyGraph& d);
    static GraphDocument from(const GenericGraph& g, int root);

    DaisyGraph to_daisy() const;        // requires labeled
    LabeledGraph to_labeled() const;    // requires labeled
    GenericGraph to_generic() const;    // either kind
    int generic_root(const GenericGraph& g) const;
};

// Thrown with 1-based line information on malformed input.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message),
          line(line_) {}
};

std::string serialize(const GraphDocument& doc);
GraphDocument parse_document(const std::string& text);
GraphDocument load_document(const std::string& path);
void save_document(const GraphDocument& doc, const std::string& path);

// Decomposition script: the steps of decompose_to_k1 in contraction order.
//
//   daisyscript 1
//   shape 2,2
//   root 0,0
//   steps 2
//   step 0 coord 1 values 2
//   cover 0 : 0 1
//   cover 1 : 0
//   ...
std::string serialize(const Decomposition& dec);
Decomposition parse_script(const std::string& text);
Decomposition load_script(const std::string& path);

// DOT export with vertices labeled by coordinate tuples (or ids) and, for
// labeled inputs, the Delta-classes rendered as colored edge groups.
std::string to_dot(const LabeledGraph& g, const std::optional<Vertex>& root);
std::string to_dot(const GenericGraph& g);

}  // namespace daisy
