#pragma once

#include "lgindex/multigraph.hpp"

namespace lgindex {

// Structural class of a connected graph relative to the admissible family:
// Path, Cycle and the three small exceptional graphs are singled out because
// iterating the line operator never reaches minimum degree 3 on them. J1 is
// the doubled edge with a pendant edge, J2 the tripled edge.
enum class GraphClass { Path, Cycle, K13, J1, J2, InG, Disconnected };

const char* to_string(GraphClass c);

// Thrown by operations that require a graph from the admissible family.
struct NotAdmissibleError : std::invalid_argument {
    GraphClass tag;
    explicit NotAdmissibleError(GraphClass c);
};

GraphClass classify(const MultiGraph& g);
inline bool is_admissible(const MultiGraph& g) { return classify(g) == GraphClass::InG; }

// G - X for a vertex subset: incident edges go with the vertices.
// Remaining ids are renumbered densely in ascending order of the old ids.
MultiGraph remove_vertices(const MultiGraph& g, const std::vector<VertexId>& xs);

// G - X for an edge subset: all vertices stay.
MultiGraph remove_edges(const MultiGraph& g, const std::vector<EdgeId>& xs);

MultiGraph remove_selection(const MultiGraph& g, const Selection& sel);

// G/X: identify the two ends of each edge in X, drop the loops that arise,
// keep parallel edges. Merged classes are recorded in the vertex labels.
MultiGraph contract(const MultiGraph& g, const std::vector<EdgeId>& xs);

// G(X): every edge of X is replaced by a length-2 path through a fresh
// vertex labelled after the source edge.
MultiGraph subdivide(const MultiGraph& g, const std::vector<EdgeId>& xs);

// Relabel vertices: vertex v becomes perm[v]; edge order is preserved.
MultiGraph permute_vertices(const MultiGraph& g, const std::vector<VertexId>& perm);

// Subgraph induced by an edge subset: vertices are the covered endpoints,
// renumbered densely; returns the graph and the old vertex ids per new id.
std::pair<MultiGraph, std::vector<VertexId>> edge_subgraph(const MultiGraph& g,
                                                           const std::vector<EdgeId>& xs);

// No induced K_{1,3}.
bool is_claw_free(const MultiGraph& g);

}  // namespace lgindex
