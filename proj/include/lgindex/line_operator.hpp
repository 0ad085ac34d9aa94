#pragma once

#include "lgindex/multigraph.hpp"

namespace lgindex {

inline constexpr int kDefaultLevelVertexCap = 200'000;

// L(G): vertex i of the result is edge i of g; two vertices are adjacent
// exactly when the source edges share an endpoint. The result is always
// simple (a parallel pair of g contributes a single adjacency).
// Throws on edgeless input.
MultiGraph line_graph(const MultiGraph& g);

// The sequence G = L^0, L^1, ..., up to the requested depth. Vertex j of
// level i is edge j of level i-1, which is the whole provenance map.
// Construction stops early, with an explicit flag, when a level would exceed
// the vertex cap or when a level runs out of edges.
struct LineTower {
    std::vector<MultiGraph> levels;
    int requested_depth = 0;
    int max_vertices = kDefaultLevelVertexCap;
    bool truncated = false;
    std::string truncation_reason;

    int depth() const { return static_cast<int>(levels.size()) - 1; }
    const MultiGraph& level(int i) const { return levels.at(i); }
};

LineTower build_tower(const MultiGraph& g, int depth,
                      int max_vertices = kDefaultLevelVertexCap);

// Unique preimage of a subset j levels down the tower. A vertex subset of
// level i maps through the provenance bijection to an edge subset of level
// i-1; an edge subset of level i first collapses to the vertices it covers
// and then maps the same way. After one or more steps the result is always
// an edge subset of level (level - j); j = 0 returns the input unchanged.
Selection pull_back(const LineTower& tower, int level, const Selection& subset, int j);

}  // namespace lgindex
