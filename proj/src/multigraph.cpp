#include "lgindex/multigraph.hpp"

#include <algorithm>
#include <queue>

namespace lgindex {

MultiGraph::MultiGraph(int num_vertices, std::vector<Edge> edges,
                       std::vector<std::string> vertex_labels,
                       std::vector<std::string> edge_labels)
    : n_(num_vertices),
      edges_(std::move(edges)),
      vlabels_(std::move(vertex_labels)),
      elabels_(std::move(edge_labels)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    if (!vlabels_.empty() && static_cast<int>(vlabels_.size()) != n_)
        throw std::invalid_argument("vertex label count mismatch");
    if (!elabels_.empty() && elabels_.size() != edges_.size())
        throw std::invalid_argument("edge label count mismatch");

    degree_.assign(n_, 0);
    incident_.assign(n_, {});
    for (EdgeId e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (ed.u == ed.v) throw std::invalid_argument("loops are not allowed");
        degree_[ed.u]++;
        degree_[ed.v]++;
        incident_[ed.u].push_back({ed.v, e});
        incident_[ed.v].push_back({ed.u, e});
    }

    neighbors_.assign(n_, {});
    for (VertexId v = 0; v < n_; ++v) {
        auto& nb = neighbors_[v];
        nb.reserve(incident_[v].size());
        for (const auto& [w, e] : incident_[v]) nb.push_back(w);
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        if (nb.size() != incident_[v].size()) simple_ = false;
    }
}

MultiGraph MultiGraph::from_pairs(int num_vertices,
                                  const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> es;
    es.reserve(pairs.size());
    for (const auto& [u, v] : pairs) es.push_back({u, v});
    return MultiGraph(num_vertices, std::move(es));
}

int MultiGraph::min_degree() const {
    if (n_ == 0) return 0;
    return *std::min_element(degree_.begin(), degree_.end());
}

int MultiGraph::max_degree() const {
    if (n_ == 0) return 0;
    return *std::max_element(degree_.begin(), degree_.end());
}

bool MultiGraph::adjacent(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = neighbors_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    int count = 0;
    for (const auto& [w, e] : incident_[u])
        if (w == v) count++;
    return count;
}

std::vector<int> MultiGraph::components() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::queue<VertexId> bfs;
    for (VertexId s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        bfs.push(s);
        while (!bfs.empty()) {
            VertexId v = bfs.front();
            bfs.pop();
            for (const auto& [w, e] : incident_[v]) {
                if (comp[w] == -1) {
                    comp[w] = next;
                    bfs.push(w);
                }
            }
        }
        next++;
    }
    return comp;
}

bool MultiGraph::is_connected() const {
    if (n_ <= 1) return true;
    auto comp = components();
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

const std::string& MultiGraph::vertex_label(VertexId v) const {
    check_vertex(v);
    static const std::string empty;
    return vlabels_.empty() ? empty : vlabels_[v];
}

const std::string& MultiGraph::edge_label(EdgeId e) const {
    if (e < 0 || e >= num_edges()) throw std::out_of_range("edge id out of range");
    static const std::string empty;
    return elabels_.empty() ? empty : elabels_[e];
}

DegreeView::DegreeView(const MultiGraph& g) : g_(&g) {
    min_ = g.min_degree();
    max_ = g.max_degree();
    by_degree_.assign(max_ + 1, {});
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        int d = g.degree(v);
        by_degree_[d].push_back(v);
        if (d % 2 == 1) odd_.push_back(v);
    }
}

const std::vector<VertexId>& DegreeView::of_degree(int d) const {
    if (d < 0 || d >= static_cast<int>(by_degree_.size())) return empty_;
    return by_degree_[d];
}

}  // namespace lgindex
