#include "lgindex/graph_ops.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lgindex {

const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Path: return "Path";
        case GraphClass::Cycle: return "Cycle";
        case GraphClass::K13: return "K13";
        case GraphClass::J1: return "J1";
        case GraphClass::J2: return "J2";
        case GraphClass::InG: return "InG";
        case GraphClass::Disconnected: return "Disconnected";
    }
    return "?";
}

NotAdmissibleError::NotAdmissibleError(GraphClass c)
    : std::invalid_argument(std::string("graph not in the admissible family: ") +
                            to_string(c)),
      tag(c) {}

GraphClass classify(const MultiGraph& g) {
    if (g.num_vertices() == 0) throw std::invalid_argument("classify: empty input");
    if (!g.is_connected()) return GraphClass::Disconnected;

    const int n = g.num_vertices();
    const int m = g.num_edges();

    // Trees of maximum degree <= 2, including single vertices and edges.
    if (g.is_simple() && m == n - 1 && g.max_degree() <= 2) return GraphClass::Path;

    // 2-regular connected; the doubled edge counts as the 2-cycle.
    if (m == n && g.min_degree() == 2 && g.max_degree() == 2) return GraphClass::Cycle;

    if (n == 4 && m == 3 && g.is_simple() && g.max_degree() == 3) return GraphClass::K13;

    // Degrees {3,2,1} on 3 vertices and 3 loopless edges force the doubled
    // edge plus pendant shape.
    if (n == 3 && m == 3 && g.max_degree() == 3 && g.min_degree() == 1)
        return GraphClass::J1;

    if (n == 2 && m == 3) return GraphClass::J2;

    return GraphClass::InG;
}

namespace {

std::vector<char> id_mask(int size, const std::vector<int>& ids, const char* what) {
    std::vector<char> mask(size, 0);
    for (int id : ids) {
        if (id < 0 || id >= size)
            throw std::invalid_argument(std::string(what) + " id out of range");
        mask[id] = 1;
    }
    return mask;
}

std::string label_or_id(const std::string& label, const char* prefix, int id) {
    return label.empty() ? prefix + std::to_string(id) : label;
}

}  // namespace

MultiGraph remove_vertices(const MultiGraph& g, const std::vector<VertexId>& xs) {
    auto gone = id_mask(g.num_vertices(), xs, "vertex");
    std::vector<int> remap(g.num_vertices(), -1);
    int next = 0;
    std::vector<std::string> vlabels;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (gone[v]) continue;
        remap[v] = next++;
        if (g.has_vertex_labels()) vlabels.push_back(g.vertex_label(v));
    }
    std::vector<Edge> edges;
    std::vector<std::string> elabels;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (gone[ed.u] || gone[ed.v]) continue;
        edges.push_back({remap[ed.u], remap[ed.v]});
        if (g.has_edge_labels()) elabels.push_back(g.edge_label(e));
    }
    return MultiGraph(next, std::move(edges), std::move(vlabels), std::move(elabels));
}

MultiGraph remove_edges(const MultiGraph& g, const std::vector<EdgeId>& xs) {
    auto gone = id_mask(g.num_edges(), xs, "edge");
    std::vector<Edge> edges;
    std::vector<std::string> elabels;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (gone[e]) continue;
        edges.push_back(g.edge(e));
        if (g.has_edge_labels()) elabels.push_back(g.edge_label(e));
    }
    std::vector<std::string> vlabels;
    if (g.has_vertex_labels())
        for (VertexId v = 0; v < g.num_vertices(); ++v) vlabels.push_back(g.vertex_label(v));
    return MultiGraph(g.num_vertices(), std::move(edges), std::move(vlabels),
                      std::move(elabels));
}

MultiGraph remove_selection(const MultiGraph& g, const Selection& sel) {
    return sel.kind == Selection::Kind::Vertices ? remove_vertices(g, sel.ids)
                                                 : remove_edges(g, sel.ids);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep the smaller id as representative
        parent[b] = a;
        return true;
    }
};

}  // namespace

MultiGraph contract(const MultiGraph& g, const std::vector<EdgeId>& xs) {
    auto in_x = id_mask(g.num_edges(), xs, "edge");
    UnionFind uf(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (in_x[e]) uf.unite(g.edge(e).u, g.edge(e).v);

    // Classes get dense ids ordered by their smallest member.
    std::vector<int> remap(g.num_vertices(), -1);
    std::vector<std::string> vlabels;
    int next = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (uf.find(v) == v) {
            remap[v] = next++;
            vlabels.emplace_back();
        }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        int cls = remap[uf.find(v)];
        std::string& lbl = vlabels[cls];
        if (!lbl.empty()) lbl += "+";
        lbl += label_or_id(g.vertex_label(v), "v", v);
    }

    std::vector<Edge> edges;
    std::vector<std::string> elabels;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (in_x[e]) continue;
        int cu = remap[uf.find(g.edge(e).u)];
        int cv = remap[uf.find(g.edge(e).v)];
        if (cu == cv) continue;  // loop created by the contraction
        edges.push_back({cu, cv});
        elabels.push_back(label_or_id(g.edge_label(e), "e", e));
    }
    return MultiGraph(next, std::move(edges), std::move(vlabels), std::move(elabels));
}

MultiGraph subdivide(const MultiGraph& g, const std::vector<EdgeId>& xs) {
    auto in_x = id_mask(g.num_edges(), xs, "edge");

    std::vector<std::string> vlabels;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        vlabels.push_back(label_or_id(g.vertex_label(v), "v", v));

    int next_vertex = g.num_vertices();
    std::vector<Edge> edges;
    std::vector<std::string> elabels;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        std::string base = label_or_id(g.edge_label(e), "e", e);
        if (!in_x[e]) {
            edges.push_back(ed);
            elabels.push_back(base);
            continue;
        }
        int w = next_vertex++;
        vlabels.push_back("sub:" + base);
        edges.push_back({ed.u, w});
        elabels.push_back(base + ":a");
        edges.push_back({w, ed.v});
        elabels.push_back(base + ":b");
    }
    return MultiGraph(next_vertex, std::move(edges), std::move(vlabels),
                      std::move(elabels));
}

MultiGraph permute_vertices(const MultiGraph& g, const std::vector<VertexId>& perm) {
    if (static_cast<int>(perm.size()) != g.num_vertices())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<char> seen(perm.size(), 0);
    for (int p : perm) {
        if (p < 0 || p >= static_cast<int>(perm.size()) || seen[p])
            throw std::invalid_argument("not a permutation");
        seen[p] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        edges.push_back({perm[g.edge(e).u], perm[g.edge(e).v]});
    std::vector<std::string> vlabels;
    if (g.has_vertex_labels()) {
        vlabels.resize(g.num_vertices());
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            vlabels[perm[v]] = g.vertex_label(v);
    }
    std::vector<std::string> elabels;
    if (g.has_edge_labels())
        for (EdgeId e = 0; e < g.num_edges(); ++e) elabels.push_back(g.edge_label(e));
    return MultiGraph(g.num_vertices(), std::move(edges), std::move(vlabels),
                      std::move(elabels));
}

std::pair<MultiGraph, std::vector<VertexId>> edge_subgraph(
    const MultiGraph& g, const std::vector<EdgeId>& xs) {
    auto in_x = id_mask(g.num_edges(), xs, "edge");
    std::vector<int> remap(g.num_vertices(), -1);
    std::vector<VertexId> old_ids;
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!in_x[e]) continue;
        for (VertexId w : {g.edge(e).u, g.edge(e).v}) {
            if (remap[w] == -1) {
                remap[w] = static_cast<int>(old_ids.size());
                old_ids.push_back(w);
            }
        }
        edges.push_back({remap[g.edge(e).u], remap[g.edge(e).v]});
    }
    return {MultiGraph(static_cast<int>(old_ids.size()), std::move(edges)), old_ids};
}

bool is_claw_free(const MultiGraph& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& nb = g.neighbors(v);
        const int d = static_cast<int>(nb.size());
        if (d < 3) continue;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (int k = j + 1; k < d; ++k)
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
                        return false;
            }
    }
    return true;
}

}  // namespace lgindex
