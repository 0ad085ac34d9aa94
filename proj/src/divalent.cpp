#include "lgindex/divalent.hpp"

#include <algorithm>

namespace lgindex {

namespace {

bool endpoints_share_triangle(const MultiGraph& g, VertexId u, VertexId v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            if (a[i] != u && a[i] != v) return true;
            ++i, ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return false;
}

void set_triangle_flag(const MultiGraph& g, DivalentPath& p) {
    if (p.closed) {
        p.in_triangle = p.length() == 3;
        return;
    }
    if (p.length() == 1)
        p.in_triangle = endpoints_share_triangle(g, p.vertices.front(), p.vertices.back());
    else if (p.length() == 2)
        p.in_triangle = g.adjacent(p.vertices.front(), p.vertices.back());
    else
        p.in_triangle = false;
}

}  // namespace

DivalentDecomposition divalent_paths(const MultiGraph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("divalent_paths requires a connected graph");

    DivalentDecomposition out;
    const int n = g.num_vertices();
    const int m = g.num_edges();

    std::vector<VertexId> branch;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) != 2) branch.push_back(v);

    if (branch.empty()) {
        // 2-regular and connected: the whole graph is one cycle.
        if (n > 0 && m > 0) {
            DivalentPath cyc;
            cyc.closed = true;
            VertexId start = 0;
            cyc.vertices.push_back(start);
            VertexId cur = start;
            EdgeId cur_edge = g.incident(start)[0].second;
            while (true) {
                cyc.edges.push_back(cur_edge);
                VertexId nxt = g.edge(cur_edge).other(cur);
                cyc.vertices.push_back(nxt);
                if (nxt == start && cyc.edges.size() == static_cast<std::size_t>(m)) break;
                auto inc = g.incident(nxt);
                cur_edge = inc[0].second == cur_edge ? inc[1].second : inc[0].second;
                cur = nxt;
            }
            cyc.degree_a = cyc.degree_b = 2;
            set_triangle_flag(g, cyc);
            out.pure_cycles.push_back(std::move(cyc));
        }
        return out;
    }

    std::vector<char> used(m, 0);
    for (VertexId b : branch) {
        for (const auto& [nbr, first_edge] : g.incident(b)) {
            if (used[first_edge]) continue;
            DivalentPath p;
            p.vertices.push_back(b);
            VertexId cur = b;
            EdgeId cur_edge = first_edge;
            while (true) {
                used[cur_edge] = 1;
                p.edges.push_back(cur_edge);
                VertexId nxt = g.edge(cur_edge).other(cur);
                p.vertices.push_back(nxt);
                if (g.degree(nxt) != 2) break;
                auto inc = g.incident(nxt);
                cur_edge = inc[0].second == cur_edge ? inc[1].second : inc[0].second;
                cur = nxt;
            }
            p.closed = p.vertices.front() == p.vertices.back();
            p.degree_a = g.degree(p.vertices.front());
            p.degree_b = g.degree(p.vertices.back());
            set_triangle_flag(g, p);
            out.paths.push_back(std::move(p));
        }
    }
    return out;
}

namespace {

void consider(std::optional<DivalentPath>& witness, int& best, const DivalentPath& p,
              int value) {
    if (value > best) {
        best = value;
        witness = p;
    }
}

// Longest proper prefix of a closed traversal: drop the closing edge.
DivalentPath open_prefix(const DivalentPath& closed) {
    DivalentPath p = closed;
    p.closed = false;
    p.edges.pop_back();
    p.vertices.pop_back();
    return p;
}

}  // namespace

DivalentProfile ell_statistics(const MultiGraph& g) {
    GraphClass cls = classify(g);
    if (cls != GraphClass::InG) throw NotAdmissibleError(cls);

    DivalentProfile prof;
    auto decomp = divalent_paths(g);

    for (const DivalentPath& p : decomp.paths) {
        const int r = p.length();
        if (p.closed) {
            // Anchored at one vertex of degree >= 3: counts toward ell3.
            consider(prof.witness_ell3, prof.ell3, p, r);
            // For the open statistic, drop the closing edge; the length-2
            // leftover of a closed triangle sits inside that triangle and is
            // improper, in which case a single edge is all that remains.
            if (r - 1 >= 1 && r - 1 != 2)
                consider(prof.witness_ell, prof.ell, open_prefix(p), r - 1);
            continue;
        }
        int lo = std::min(p.degree_a, p.degree_b);
        int hi = std::max(p.degree_a, p.degree_b);
        if (lo == 1 && hi == 3) consider(prof.witness_ell1, prof.ell1, p, r);
        else if (lo == 1 && hi >= 4) consider(prof.witness_ell2, prof.ell2, p, r);
        else if (lo >= 3) consider(prof.witness_ell3, prof.ell3, p, r);

        bool improper = r == 2 && p.in_triangle;
        if (!improper) consider(prof.witness_ell, prof.ell, p, r);
    }

    // Any single edge is a proper divalent path.
    if (prof.ell < 1 && g.num_edges() > 0) {
        DivalentPath e;
        e.vertices = {g.edge(0).u, g.edge(0).v};
        e.edges = {0};
        e.degree_a = g.degree(e.vertices.front());
        e.degree_b = g.degree(e.vertices.back());
        set_triangle_flag(g, e);
        consider(prof.witness_ell, prof.ell, e, 1);
    }

    prof.ell0 = std::max({prof.ell1 + 1, prof.ell2, prof.ell3 - 1});

    // Pendant condition: some degree-3 vertex is incident with exactly two
    // edges that end at a degree-1 vertex.
    DegreeView dv(g);
    for (VertexId v : dv.of_degree(3)) {
        int pendant_edges = 0;
        for (const auto& [w, e] : g.incident(v))
            if (g.degree(w) == 1) pendant_edges++;
        if (pendant_edges == 2) {
            prof.pendant_condition = true;
            break;
        }
    }
    return prof;
}

namespace {

std::optional<int> d_tilde_direct(const MultiGraph& g, const TowerLimits& limits) {
    MultiGraph cur = g;
    for (int i = 0; i <= limits.max_depth; ++i) {
        if (cur.num_vertices() > 0 && cur.min_degree() >= 3) return i;
        if (i == limits.max_depth) break;
        if (cur.num_edges() == 0 || cur.num_edges() > limits.max_vertices) break;
        cur = line_graph(cur);
    }
    return std::nullopt;
}

}  // namespace

DTildeResult d_tilde(const MultiGraph& g, DTildeMode mode, const TowerLimits& limits) {
    GraphClass cls = classify(g);
    if (cls != GraphClass::InG) throw NotAdmissibleError(cls);

    DTildeResult res;
    if (mode == DTildeMode::Formula || mode == DTildeMode::Audit) {
        if (g.min_degree() >= 3) {
            res.formula = 0;
        } else {
            DivalentProfile prof = ell_statistics(g);
            res.formula =
                prof.pendant_condition ? std::max(prof.ell0, 3) : prof.ell0;
        }
    }
    if (mode == DTildeMode::Direct || mode == DTildeMode::Audit) {
        res.direct = d_tilde_direct(g, limits);
        res.direct_capped = !res.direct.has_value();
    }
    return res;
}

DivalentProfile divalent_profile(const MultiGraph& g, const TowerLimits& limits) {
    DivalentProfile prof = ell_statistics(g);
    DTildeResult dt = d_tilde(g, DTildeMode::Audit, limits);
    prof.d_tilde_formula = dt.formula;
    prof.d_tilde_direct = dt.direct;
    prof.direct_capped = dt.direct_capped;
    return prof;
}

}  // namespace lgindex
