#include "lgindex/line_operator.hpp"

#include <algorithm>

namespace lgindex {

MultiGraph line_graph(const MultiGraph& g) {
    if (g.num_edges() == 0)
        throw std::invalid_argument("line graph undefined for edgeless input");

    std::size_t pair_bound = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::size_t d = g.incident(v).size();
        pair_bound += d * (d - 1) / 2;
    }

    std::vector<Edge> pairs;
    pairs.reserve(pair_bound);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                EdgeId a = inc[i].second, b = inc[j].second;
                if (a > b) std::swap(a, b);
                pairs.push_back({a, b});
            }
    }
    // A parallel pair of g shares both endpoints and shows up twice.
    std::sort(pairs.begin(), pairs.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    pairs.erase(std::unique(pairs.begin(), pairs.end(),
                            [](const Edge& x, const Edge& y) { return x.u == y.u && x.v == y.v; }),
                pairs.end());
    return MultiGraph(g.num_edges(), std::move(pairs));
}

LineTower build_tower(const MultiGraph& g, int depth, int max_vertices) {
    if (depth < 0) throw std::invalid_argument("tower depth must be >= 0");
    if (max_vertices <= 0) throw std::invalid_argument("vertex cap must be positive");
    if (g.num_vertices() == 0) throw std::invalid_argument("tower of empty graph");

    LineTower tower;
    tower.requested_depth = depth;
    tower.max_vertices = max_vertices;
    tower.levels.push_back(g);
    for (int i = 1; i <= depth; ++i) {
        const MultiGraph& prev = tower.levels.back();
        if (prev.num_edges() == 0) {
            tower.truncated = true;
            tower.truncation_reason = "level " + std::to_string(i - 1) + " is edgeless";
            break;
        }
        if (prev.num_edges() > max_vertices) {
            tower.truncated = true;
            tower.truncation_reason = "level " + std::to_string(i) + " would have " +
                                      std::to_string(prev.num_edges()) +
                                      " vertices, over the cap of " +
                                      std::to_string(max_vertices);
            break;
        }
        tower.levels.push_back(line_graph(prev));
    }
    return tower;
}

Selection pull_back(const LineTower& tower, int level, const Selection& subset, int j) {
    if (level < 0 || level > tower.depth())
        throw std::invalid_argument("pull_back: level out of range");
    if (j < 0 || j > level) throw std::invalid_argument("pull_back: j out of range");

    const MultiGraph& at = tower.level(level);
    const int limit =
        subset.kind == Selection::Kind::Vertices ? at.num_vertices() : at.num_edges();
    for (int id : subset.ids)
        if (id < 0 || id >= limit)
            throw std::invalid_argument("pull_back: id out of range for level");

    if (j == 0) return subset;

    Selection cur = subset;
    int cur_level = level;
    for (int step = 0; step < j; ++step) {
        if (cur.kind == Selection::Kind::Edges) {
            // Collapse to the covered vertices of the current level first.
            std::vector<int> covered;
            covered.reserve(cur.ids.size() * 2);
            for (int e : cur.ids) {
                covered.push_back(tower.level(cur_level).edge(e).u);
                covered.push_back(tower.level(cur_level).edge(e).v);
            }
            std::sort(covered.begin(), covered.end());
            covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
            cur.ids = std::move(covered);
        }
        // Vertex j of this level is edge j one level down.
        cur.kind = Selection::Kind::Edges;
        std::sort(cur.ids.begin(), cur.ids.end());
        cur_level -= 1;
    }
    return cur;
}

}  // namespace lgindex
