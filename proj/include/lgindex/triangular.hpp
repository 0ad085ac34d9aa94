#pragma once

#include <optional>

#include "lgindex/divalent.hpp"
#include "lgindex/multigraph.hpp"

namespace lgindex {

// Number of triangles through each edge: common distinct neighbors of the two
// endpoints. Parallel edges never form triangles on their own.
std::vector<int> triangle_counts(const MultiGraph& g);

// Largest k such that every edge lies in at least k triangles (0 on an
// edgeless graph).
int min_triangle_count(const MultiGraph& g);

inline bool is_k_triangular(const MultiGraph& g, int k) {
    return g.num_edges() > 0 && min_triangle_count(g) >= k;
}

struct TriangularReport {
    int k = 1;
    std::vector<int> per_edge;
    bool k_triangular = false;
    std::optional<int> t_k_exact;  // absent when a cap was hit
    bool cap_hit = false;
    std::optional<int> t_k_bound;  // absent when delta <= 2 and the level count is unknown
};

// Smallest m with L^m(g) k-triangular, walked level by level starting at
// m = 0. Requires an admissible graph and k >= 1.
std::optional<int> t_k_exact(const MultiGraph& g, int k, const TowerLimits& limits = {});

// Closed-form upper bound on the k-triangular index; k >= 2 required.
// d_tilde is only consulted in the delta <= 2 branch.
int t_k_bound(int delta, int d_tilde, int k);

// For a simple admissible k-triangular graph (k >= 2): is L(g) k-triangular
// as well? Expected to always hold.
bool check_stability(const MultiGraph& g, int k);

// For a k-triangular graph and an edge set X with 1 <= |X| < k: is g - X
// (k - |X|)-triangular? Expected to always hold.
bool triangular_after_deletion(const MultiGraph& g, int k, const std::vector<EdgeId>& xs);

TriangularReport triangular_report(const MultiGraph& g, int k, const TowerLimits& limits = {});

}  // namespace lgindex
