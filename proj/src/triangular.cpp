#include "lgindex/triangular.hpp"

#include <algorithm>

#include "lgindex/bounds.hpp"
#include "lgindex/graph_ops.hpp"
#include "lgindex/line_operator.hpp"

namespace lgindex {

std::vector<int> triangle_counts(const MultiGraph& g) {
    std::vector<int> counts(g.num_edges(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& a = g.neighbors(g.edge(e).u);
        const auto& b = g.neighbors(g.edge(e).v);
        int common = 0;
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) {
                if (a[i] != g.edge(e).u && a[i] != g.edge(e).v) common++;
                ++i, ++j;
            } else if (a[i] < b[j]) {
                ++i;
            } else {
                ++j;
            }
        }
        counts[e] = common;
    }
    return counts;
}

int min_triangle_count(const MultiGraph& g) {
    if (g.num_edges() == 0) return 0;
    auto counts = triangle_counts(g);
    return *std::min_element(counts.begin(), counts.end());
}

std::optional<int> t_k_exact(const MultiGraph& g, int k, const TowerLimits& limits) {
    GraphClass cls = classify(g);
    if (cls != GraphClass::InG) throw NotAdmissibleError(cls);
    if (k < 1) throw std::invalid_argument("t_k_exact requires k >= 1");

    MultiGraph cur = g;
    for (int i = 0; i <= limits.max_depth; ++i) {
        if (is_k_triangular(cur, k)) return i;
        if (i == limits.max_depth) break;
        if (cur.num_edges() == 0 || cur.num_edges() > limits.max_vertices) break;
        cur = line_graph(cur);
    }
    return std::nullopt;
}

int t_k_bound(int delta, int d_tilde, int k) {
    if (k < 2) throw std::invalid_argument("t_k_bound requires k >= 2");
    if (delta <= 2) return d_tilde + 1 + ceil_lg(k);
    if (delta <= k + 1) return 1 + ceil_lg_ratio(k, delta - 2);
    return 1;
}

bool check_stability(const MultiGraph& g, int k) {
    if (k < 2) throw std::invalid_argument("check_stability requires k >= 2");
    if (!g.is_simple()) throw std::invalid_argument("check_stability requires a simple graph");
    GraphClass cls = classify(g);
    if (cls != GraphClass::InG) throw NotAdmissibleError(cls);
    if (!is_k_triangular(g, k))
        throw std::invalid_argument("check_stability: input is not k-triangular");
    return is_k_triangular(line_graph(g), k);
}

bool triangular_after_deletion(const MultiGraph& g, int k, const std::vector<EdgeId>& xs) {
    const int s = static_cast<int>(xs.size());
    if (s < 1 || s >= k)
        throw std::invalid_argument("triangular_after_deletion requires 1 <= |X| < k");
    if (!is_k_triangular(g, k))
        throw std::invalid_argument("triangular_after_deletion: input is not k-triangular");
    return is_k_triangular(remove_edges(g, xs), k - s);
}

TriangularReport triangular_report(const MultiGraph& g, int k, const TowerLimits& limits) {
    TriangularReport rep;
    rep.k = k;
    rep.per_edge = triangle_counts(g);
    rep.k_triangular = is_k_triangular(g, k);
    if (classify(g) == GraphClass::InG && k >= 1) {
        rep.t_k_exact = t_k_exact(g, k, limits);
        rep.cap_hit = !rep.t_k_exact.has_value();
        if (k >= 2) {
            int delta = g.min_degree();
            if (delta >= 3) {
                rep.t_k_bound = t_k_bound(delta, 0, k);
            } else {
                DTildeResult dt = d_tilde(g, DTildeMode::Audit, limits);
                if (dt.direct)
                    rep.t_k_bound = t_k_bound(delta, *dt.direct, k);
                else if (dt.formula)
                    rep.t_k_bound = t_k_bound(delta, *dt.formula, k);
            }
        }
    }
    return rep;
}

}  // namespace lgindex
