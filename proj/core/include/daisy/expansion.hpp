#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "daisy/daisy_graph.hpp"

namespace daisy {

// Validity of a family of covering sets W_1..W_m for expansion:
//   1. all pairwise intersections are non-empty
//   2. the union covers V
//   3. no edges run between W_i \ W_j and W_j \ W_i
//   4. <W_i> and <W_i u W_j> are isometric in the base
// A failed condition carries a human-readable witness.
struct CoverValidation {
    bool intersections_ok = true;
    bool union_ok = true;
    bool no_cross_edges = true;
    bool isometric_ok = true;
    // one named witness per failed condition, empty when the condition holds
    std::string intersections_witness;
    std::string union_witness;
    std::string cross_edge_witness;
    std::string isometric_witness;

    bool valid() const {
        return intersections_ok && union_ok && no_cross_edges && isometric_ok;
    }
    // the first violation, empty when valid
    std::string witness() const;
};

CoverValidation validate_cover(const GenericGraph& base,
                               const std::vector<std::vector<int>>& sets);

// Expansion of the base relative to the sets: each vertex x becomes the
// clique {(x, i) : x in W_i}, and (x,i)-(y,i) is an edge for every base edge
// xy inside W_i. Produced vertices are ordered by (base vertex, set index).
struct ExpansionResult {
    GenericGraph graph;
    // produced vertex id -> (base vertex id, cover index)
    std::vector<std::pair<int, int>> origin;
};

// Throws naming the violated condition when the family is invalid.
ExpansionResult expand(const GenericGraph& base,
                       const std::vector<std::vector<int>>& sets);

// Daisy peripheral expansion: covers[0] must be all of V(g) and every cover
// must induce a daisy graph of the host with respect to 0^n; the family must
// satisfy the four cover conditions in g. The result lives on the host with
// a new first coordinate of size covers.size(), value l marking the copy of
// covers[l]. Throws naming the violated clause.
DaisyGraph daisy_peripheral_expand(const DaisyGraph& g,
                                   const std::vector<std::vector<Vertex>>& covers);

// Same construction with the new coordinate inserted at `position`
// (0 = prepend, matching daisy_peripheral_expand).
DaisyGraph daisy_peripheral_expand_at(const DaisyGraph& g,
                                      const std::vector<std::vector<Vertex>>& covers,
                                      int position);

// Contraction of the Delta-class of one coordinate, realized as coordinate
// deletion. covers[l] is the image of the level set W_l^coord, so expanding
// the result relative to the covers reproduces g.
struct ContractionResult {
    DaisyGraph graph;
    int coord = 0;
    std::vector<std::vector<Vertex>> covers;
};

// Requires root 0^n and every value of the coordinate in use (the host must
// be minimal in that coordinate). Throws otherwise.
ContractionResult contract(const DaisyGraph& g, int coord);

// One recorded contraction: the coordinate removed and the covers needed to
// re-expand at the same position.
struct DecomposeStep {
    int coord = 0;
    std::vector<std::vector<Vertex>> covers;
};

struct Decomposition {
    Shape shape;  // of the original graph
    Vertex root;
    std::vector<DecomposeStep> steps;  // in contraction order
};

// Contracts coordinates in descending index order down to the one-vertex
// graph, validating at every stage that the intermediate is an isometric
// daisy graph of its minimal host. Throws on any violation.
Decomposition decompose_to_k1(const DaisyGraph& g);

// Replays a decomposition from the one-vertex graph; reconstructs the
// original vertex labels exactly.
DaisyGraph replay(const Decomposition& dec);

// Brešar-style contraction of a generic partial Hamming graph: every clique
// spanned by the Delta-class of `e` collapses to one vertex. `fibers[q]`
// lists the original vertices merged into quotient vertex q. Throws when the
// class components are not cliques (the input is then not a partial Hamming
// graph).
struct GenericContraction {
    GenericGraph graph;
    std::vector<std::vector<int>> fibers;
};
GenericContraction contract_generic(const GenericGraph& g, Edge e);

}  // namespace daisy
