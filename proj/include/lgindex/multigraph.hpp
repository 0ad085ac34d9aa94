#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgindex {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u;
    VertexId v;

    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool touches(VertexId w) const { return w == u || w == v; }
    std::pair<VertexId, VertexId> sorted() const {
        return u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
    }
};

// A vertex- or edge-subset of one graph (or of one tower level).
struct Selection {
    enum class Kind { Vertices, Edges };
    Kind kind = Kind::Vertices;
    std::vector<int> ids;

    static Selection vertices(std::vector<int> ids) {
        return Selection{Kind::Vertices, std::move(ids)};
    }
    static Selection edges(std::vector<int> ids) {
        return Selection{Kind::Edges, std::move(ids)};
    }
};

// Finite loopless multigraph. Vertex ids are dense integers [0, n); edge ids
// are dense [0, m) in construction order. Parallel edges are allowed and keep
// distinct ids; loops are rejected. Instances are immutable once built, so
// they can be shared freely across threads.
class MultiGraph {
  public:
    MultiGraph() = default;

    MultiGraph(int num_vertices, std::vector<Edge> edges,
               std::vector<std::string> vertex_labels = {},
               std::vector<std::string> edge_labels = {});

    static MultiGraph from_pairs(int num_vertices,
                                 const std::vector<std::pair<int, int>>& pairs);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(VertexId v) const { return degree_.at(v); }
    int min_degree() const;
    int max_degree() const;

    // Incident (neighbor, edge id) pairs in edge-id order; parallel edges
    // appear once per copy.
    std::span<const std::pair<VertexId, EdgeId>> incident(VertexId v) const {
        check_vertex(v);
        return {incident_[v].data(), incident_[v].size()};
    }

    // Sorted distinct neighbors.
    const std::vector<VertexId>& neighbors(VertexId v) const {
        check_vertex(v);
        return neighbors_[v];
    }

    bool adjacent(VertexId u, VertexId v) const;
    // Number of parallel copies joining u and v.
    int multiplicity(VertexId u, VertexId v) const;

    bool is_simple() const { return simple_; }
    bool is_connected() const;
    // Component index per vertex, numbered by first occurrence.
    std::vector<int> components() const;

    const std::string& vertex_label(VertexId v) const;
    const std::string& edge_label(EdgeId e) const;
    bool has_vertex_labels() const { return !vlabels_.empty(); }
    bool has_edge_labels() const { return !elabels_.empty(); }

  private:
    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degree_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> incident_;
    std::vector<std::vector<VertexId>> neighbors_;
    std::vector<std::string> vlabels_;
    std::vector<std::string> elabels_;
    bool simple_ = true;
};

// Degree-indexed views: D_i sets, odd-degree set, extremes.
class DegreeView {
  public:
    explicit DegreeView(const MultiGraph& g);

    // D_i(G): vertices of degree exactly d (empty vector when none).
    const std::vector<VertexId>& of_degree(int d) const;
    // O(G): odd-degree vertices, ascending.
    const std::vector<VertexId>& odd() const { return odd_; }
    int min_degree() const { return min_; }
    int max_degree() const { return max_; }

    const std::vector<VertexId>& neighbors_of(VertexId v) const { return g_->neighbors(v); }
    std::span<const std::pair<VertexId, EdgeId>> edges_at(VertexId v) const {
        return g_->incident(v);
    }

  private:
    const MultiGraph* g_;
    std::vector<std::vector<VertexId>> by_degree_;
    std::vector<VertexId> odd_;
    std::vector<VertexId> empty_;
    int min_ = 0;
    int max_ = 0;
};

}  // namespace lgindex
