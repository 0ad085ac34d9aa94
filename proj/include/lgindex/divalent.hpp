#pragma once

#include <optional>

#include "lgindex/graph_ops.hpp"
#include "lgindex/line_operator.hpp"
#include "lgindex/multigraph.hpp"

namespace lgindex {

// A path whose internal vertices all have degree 2 in the host graph.
// Closed traversals start and end at the same anchor vertex (the only vertex
// of degree != 2 on them); for those, vertices.front() == vertices.back().
struct DivalentPath {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    bool closed = false;
    // Whether the whole path lies inside a triangle of the host graph.
    bool in_triangle = false;
    int degree_a = 0;  // host degree of vertices.front()
    int degree_b = 0;  // host degree of vertices.back()

    int length() const { return static_cast<int>(edges.size()); }
};

// Maximal divalent paths (each reported once, up to reversal, closed
// traversals flagged) and, separately, all-degree-2 cycles.
struct DivalentDecomposition {
    std::vector<DivalentPath> paths;
    std::vector<DivalentPath> pure_cycles;
};

// Requires a connected graph.
DivalentDecomposition divalent_paths(const MultiGraph& g);

struct TowerLimits {
    int max_depth = 24;
    int max_vertices = kDefaultLevelVertexCap;
};

// The divalent length statistics of an admissible graph. A statistic whose
// category has no qualifying path is 0. ell3 ranges over both open paths with
// both end degrees >= 3 and closed traversals anchored at a vertex of degree
// >= 3; this choice is deliberate and is surfaced by the audit mode.
struct DivalentProfile {
    int ell = 0;    // longest proper (non-closed, not length-2-in-triangle) path
    int ell1 = 0;   // end degrees (1,3)
    int ell2 = 0;   // end degrees (1,t), t >= 4
    int ell3 = 0;   // end degrees both >= 3, closed traversals included
    int ell0 = 0;   // max{ell1 + 1, ell2, ell3 - 1}
    bool pendant_condition = false;  // some degree-3 vertex meets 2 pendant edges

    std::optional<DivalentPath> witness_ell, witness_ell1, witness_ell2, witness_ell3;

    std::optional<int> d_tilde_formula;
    std::optional<int> d_tilde_direct;
    bool direct_capped = false;
};

// Throws NotAdmissibleError when the graph is a path, cycle, K_{1,3}, J1, J2
// or disconnected.
DivalentProfile ell_statistics(const MultiGraph& g);

enum class DTildeMode { Formula, Direct, Audit };

struct DTildeResult {
    std::optional<int> formula;
    std::optional<int> direct;   // nullopt when the tower cap was reached
    bool direct_capped = false;

    bool agree() const { return formula && direct && *formula == *direct; }
};

// Levels needed until minimum degree 3. Formula mode evaluates the closed
// form (0 immediately when delta >= 3); direct mode iterates the line
// operator; audit runs both and reports agreement. Requires an admissible
// graph.
DTildeResult d_tilde(const MultiGraph& g, DTildeMode mode, const TowerLimits& limits = {});

// ell_statistics plus both level counts (audit).
DivalentProfile divalent_profile(const MultiGraph& g, const TowerLimits& limits = {});

}  // namespace lgindex
