#pragma once

#include <optional>
#include <vector>

#include "daisy/labeled_graph.hpp"

namespace daisy {

// W_{uv} = vertices strictly closer to u than to v, in the graph's own
// metric (never the host's). Throws when uv is not an edge.
std::vector<int> w_set(const GenericGraph& g, int u, int v);

// uv ~ xy iff x in W_{uv} and y in W_{vu}; tried in both orientations of the
// second edge, which makes the relation symmetric on unordered edges.
bool tilde_related(const GenericGraph& g, Edge e1, Edge e2);

// uv D xy iff uv ~ xy or some clique contains edges e, f with xy ~ e and
// uv ~ f. Equivalently: the ~-classes of two edges lying in a common clique
// are merged.
bool delta_related(const GenericGraph& g, Edge e1, Edge e2);

struct EdgeClass {
    std::vector<Edge> edges;     // sorted
    std::optional<Edge> anchor;  // a root-incident edge, when one exists
};

// The partition of E(g) into Delta-classes: ~-classes merged through shared
// cliques, then closed transitively. Classes are ordered by smallest edge.
std::vector<EdgeClass> delta_classes(const GenericGraph& g);

// Oracle route: the transitive closure of the pairwise Delta predicate
// evaluated on all edge pairs. Intended for cross-checks on small graphs.
std::vector<EdgeClass> delta_classes_by_closure(const GenericGraph& g);

// Delta-classes of the induced subgraph, with anchors set to the smallest
// root-incident edge of each class when `root` is given.
std::vector<EdgeClass> delta_classes(const LabeledGraph& g,
                                     const std::optional<Vertex>& root = std::nullopt);

// The level and contact sets of one coordinate of a daisy graph over its
// minimal host:
//   levels[i]        W_i^j = members with coordinate j equal to i
//   contacts[i]      U_i^j = members of W_i^j with a neighbor in W_0^j
//   zero_contacts[i] U_{0i}^j = members of W_0^j with a neighbor in W_i^j (i >= 1)
//   zero_contact_union = union of the zero_contacts
// All sets hold vertex indices into g. Throws when coord is out of range.
struct CoordinateSlice {
    int coord = 0;
    std::vector<std::vector<int>> levels;
    std::vector<std::vector<int>> contacts;
    std::vector<std::vector<int>> zero_contacts;  // index i-1 holds U_{0i}^j
    std::vector<int> zero_contact_union;
};
CoordinateSlice coordinate_slice(const LabeledGraph& g, int coord);

// True iff W_value^coord equals the Djokovic half-space of the edge between
// the root and the unit vertex of (coord, value); for value 0 the root side
// of the smallest populated nonzero level is used. Throws when the level is
// empty or the defining edge is missing.
bool verify_w_equals_wuv(const LabeledGraph& g, int coord, int value);

struct PeripheralReport {
    bool peripheral = false;
    // A vertex of some nonzero level with no neighbor in the zero level.
    std::optional<Vertex> witness;
};

// True iff every nonzero level's contact set equals the level, i.e. the
// Delta-class of the coordinate is peripheral.
PeripheralReport is_peripheral_class(const LabeledGraph& g, int coord);

// The edge of the class incident to the root, choosing the endpoint that is
// the smallest unit vertex (ties by coordinate, then value). Throws when the
// class contains no root-incident edge, which signals a structure violation.
Edge anchored_edge(const LabeledGraph& g, const EdgeClass& cls, const Vertex& root);

}  // namespace daisy
