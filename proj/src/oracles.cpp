#include "lgindex/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>

#include "lgindex/graph_ops.hpp"

namespace lgindex {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        case Verdict::Undetermined: return "undetermined";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------- bit masks

struct EdgeMask {
    std::vector<std::uint64_t> w;

    explicit EdgeMask(int bits) : w((bits + 63) / 64, 0) {}

    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void operator^=(const EdgeMask& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
    bool contains(const EdgeMask& o) const {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (o.w[k] & ~w[k]) return false;
        return true;
    }
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w.size(); ++k) {
            std::uint64_t word = w[k];
            while (word) {
                int b = std::countr_zero(word);
                f(static_cast<int>(k * 64 + b));
                word &= word - 1;
            }
        }
    }
    std::vector<int> ids() const {
        std::vector<int> out;
        for_each([&](int e) { out.push_back(e); });
        return out;
    }
};

// ------------------------------------------------------------- cycle space

struct CycleSpace {
    int dim = 0;
    std::vector<EdgeMask> fundamentals;
};

// Fundamental cycles of a BFS forest over the alive edges. Every even
// subgraph of the alive subgraph is a XOR of fundamentals.
CycleSpace build_cycle_space(const MultiGraph& g, const std::vector<char>& alive) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    CycleSpace cs;
    std::vector<int> parent_vertex(n, -1), parent_edge(n, -1), depth(n, -1);
    std::vector<char> in_tree(m, 0);
    std::vector<int> queue;
    for (VertexId s = 0; s < n; ++s) {
        if (depth[s] != -1) continue;
        depth[s] = 0;
        queue.assign(1, s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            VertexId v = queue[qi];
            for (const auto& [w, e] : g.incident(v)) {
                if (!alive[e] || depth[w] != -1) continue;
                depth[w] = depth[v] + 1;
                parent_vertex[w] = v;
                parent_edge[w] = e;
                in_tree[e] = 1;
                queue.push_back(w);
            }
        }
    }
    for (EdgeId e = 0; e < m; ++e) {
        if (!alive[e] || in_tree[e]) continue;
        EdgeMask mask(m);
        mask.set(e);
        VertexId a = g.edge(e).u, b = g.edge(e).v;
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            mask.set(parent_edge[a]);
            a = parent_vertex[a];
        }
        cs.fundamentals.push_back(std::move(mask));
    }
    cs.dim = static_cast<int>(cs.fundamentals.size());
    return cs;
}

// Visits every non-empty even subgraph in Gray-code order until the visitor
// returns true; reports whether a visitor accepted.
template <class F>
bool enumerate_cycle_space(const CycleSpace& cs, int bits, long long& nodes, F&& visit) {
    EdgeMask cur(bits);
    const std::uint64_t total = std::uint64_t(1) << cs.dim;
    for (std::uint64_t it = 1; it < total; ++it) {
        cur ^= cs.fundamentals[std::countr_zero(it)];
        ++nodes;
        if (visit(cur)) return true;
    }
    return false;
}

// Union-find structure of one even subgraph: covered vertices and whether
// they form a single connected block.
struct MaskScan {
    int covered = 0;
    int components = 0;
    std::vector<int> parent;  // -1 = untouched

    void scan(const MultiGraph& g, const EdgeMask& mask) {
        parent.assign(g.num_vertices(), -1);
        covered = 0;
        components = 0;
        mask.for_each([&](int e) {
            int ru = root(g.edge(e).u), rv = root(g.edge(e).v);
            if (ru != rv) {
                parent[rv] = ru;
                components--;
            }
        });
    }

    int root(int v) {
        if (parent[v] == -1) {
            parent[v] = v;
            covered++;
            components++;
            return v;
        }
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }

    bool is_covered(int v) const { return parent[v] != -1; }
};

bool dominates_all_edges(const MultiGraph& g, const MaskScan& scan) {
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (!scan.is_covered(g.edge(e).u) && !scan.is_covered(g.edge(e).v)) return false;
    return true;
}

// ------------------------------------------------------- hamiltonian search

struct HamiltonianSearch {
    const MultiGraph& g;
    int n;
    VertexId start = 0;
    std::vector<char> visited;
    std::vector<VertexId> path;
    std::vector<char> seen;
    std::vector<VertexId> queue;
    long long nodes = 0;

    explicit HamiltonianSearch(const MultiGraph& gg)
        : g(gg), n(gg.num_vertices()), visited(n, 0), seen(n, 0) {
        for (VertexId v = 1; v < n; ++v)
            if (g.degree(v) < g.degree(start)) start = v;
    }

    int unvisited_degree(VertexId w) const {
        int d = 0;
        for (VertexId x : g.neighbors(w))
            if (!visited[x]) d++;
        return d;
    }

    bool feasible(VertexId cur) {
        bool start_reachable = false;
        for (VertexId w = 0; w < n; ++w) {
            if (visited[w]) continue;
            int avail = unvisited_degree(w);
            if (g.adjacent(w, cur)) avail++;
            bool to_start = g.adjacent(w, start);
            if (to_start) {
                avail++;
                start_reachable = true;
            }
            if (avail < 2) return false;
        }
        if (!start_reachable) return false;
        // The unvisited vertices plus the path head must stay connected.
        std::fill(seen.begin(), seen.end(), 0);
        queue.assign(1, cur);
        seen[cur] = 1;
        int reached = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (VertexId x : g.neighbors(queue[qi])) {
                if (visited[x] || seen[x]) continue;
                seen[x] = 1;
                reached++;
                queue.push_back(x);
            }
        }
        return reached == n - static_cast<int>(path.size());
    }

    bool extend(VertexId cur) {
        nodes++;
        if (static_cast<int>(path.size()) == n) return g.adjacent(cur, start);
        if (!feasible(cur)) return false;
        std::vector<std::pair<int, VertexId>> cands;
        for (VertexId w : g.neighbors(cur))
            if (!visited[w]) cands.push_back({unvisited_degree(w), w});
        std::sort(cands.begin(), cands.end());
        for (const auto& [onward, w] : cands) {
            visited[w] = 1;
            path.push_back(w);
            if (extend(w)) return true;
            path.pop_back();
            visited[w] = 0;
        }
        return false;
    }

    std::optional<std::vector<VertexId>> run() {
        if (!g.is_connected() || g.min_degree() < 2) return std::nullopt;
        visited[start] = 1;
        path.assign(1, start);
        if (extend(start)) return path;
        return std::nullopt;
    }
};

std::optional<std::vector<VertexId>> find_hamiltonian_cycle(const MultiGraph& g,
                                                            long long& nodes) {
    HamiltonianSearch search(g);
    auto res = search.run();
    nodes += search.nodes;
    return res;
}

// --------------------------------------------------------------- utilities

// Visits k-subsets of [0, n) in lexicographic order; the visitor returns
// false to abort the whole enumeration.
template <class F>
bool for_each_combination(int n, int k, F&& visit) {
    if (k > n) return true;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!visit(static_cast<const std::vector<int>&>(idx))) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

long long count_subsets_up_to(int n, int k, long long cap) {
    long long total = 0;
    long long binom = 1;
    for (int i = 0; i <= k; ++i) {
        total += binom;
        if (total > cap) return cap + 1;
        binom = binom * (n - i) / (i + 1);
        if (binom < 0) return cap + 1;
    }
    return total;
}

bool all_positive_degrees_even(const MultiGraph& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) % 2 != 0) return false;
    return true;
}

std::vector<EdgeId> all_edge_ids(const MultiGraph& g) {
    std::vector<EdgeId> ids(g.num_edges());
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

}  // namespace

// ------------------------------------------------------------------ oracles

OracleCertificate hamiltonian(const MultiGraph& g) {
    if (g.num_vertices() < 3)
        throw std::invalid_argument("hamiltonian requires at least 3 vertices");
    auto t0 = Clock::now();
    OracleCertificate cert;
    auto cycle = find_hamiltonian_cycle(g, cert.stats.nodes);
    if (cycle) {
        cert.verdict = Verdict::True;
        cert.witness = CycleWitness{std::move(*cycle)};
    } else {
        cert.verdict = Verdict::False;
        cert.note = "no spanning cycle (exhaustive)";
    }
    cert.stats.time_ms = ms_since(t0);
    return cert;
}

OracleCertificate s_hamiltonian(const MultiGraph& g, int s, const OracleCaps& caps) {
    const int n = g.num_vertices();
    if (s < 0) throw std::invalid_argument("s_hamiltonian requires s >= 0");
    if (s > n - 3) throw std::invalid_argument("s_hamiltonian requires s <= |V| - 3");

    auto t0 = Clock::now();
    OracleCertificate cert;
    const bool store =
        count_subsets_up_to(n, s, caps.witness_case_cap) <= caps.witness_case_cap;
    CaseMapWitness cases;

    for (int k = 0; k <= s; ++k) {
        bool ok = for_each_combination(n, k, [&](const std::vector<int>& subset) {
            std::vector<char> gone(n, 0);
            for (int v : subset) gone[v] = 1;
            std::vector<VertexId> keep;
            keep.reserve(n - k);
            std::vector<int> remap(n, -1);
            for (VertexId v = 0; v < n; ++v)
                if (!gone[v]) {
                    remap[v] = static_cast<int>(keep.size());
                    keep.push_back(v);
                }
            std::vector<Edge> edges;
            for (EdgeId e = 0; e < g.num_edges(); ++e) {
                const Edge& ed = g.edge(e);
                if (!gone[ed.u] && !gone[ed.v]) edges.push_back({remap[ed.u], remap[ed.v]});
            }
            MultiGraph h(static_cast<int>(keep.size()), std::move(edges));
            auto cycle = find_hamiltonian_cycle(h, cert.stats.nodes);
            if (!cycle) {
                cert.verdict = Verdict::False;
                cert.witness = VertexSetViolation{subset};
                return false;
            }
            if (store) {
                CaseMapWitness::Case c;
                c.removed = subset;
                CycleWitness cw;
                cw.order.reserve(cycle->size());
                for (VertexId v : *cycle) cw.order.push_back(keep[v]);
                c.cycle = std::move(cw);
                cases.cases.push_back(std::move(c));
            }
            return true;
        });
        if (!ok) {
            cert.stats.time_ms = ms_since(t0);
            return cert;
        }
    }
    cert.verdict = Verdict::True;
    if (store)
        cert.witness = std::move(cases);
    else
        cert.note = "case map elided (over witness cap)";
    cert.stats.time_ms = ms_since(t0);
    return cert;
}

OracleCertificate spanning_closed_trail(const MultiGraph& g, const OracleCaps& caps) {
    if (g.num_vertices() == 0)
        throw std::invalid_argument("spanning_closed_trail: empty input");
    auto t0 = Clock::now();
    OracleCertificate cert;
    const int n = g.num_vertices();

    if (n == 1) {
        cert.verdict = Verdict::True;
        cert.witness = TrailWitness{{}, 0};
        cert.stats.time_ms = ms_since(t0);
        return cert;
    }
    if (g.num_edges() == 0 || !g.is_connected() || g.min_degree() < 2) {
        cert.verdict = Verdict::False;
        cert.note = "no connected spanning even subgraph possible";
        cert.stats.time_ms = ms_since(t0);
        return cert;
    }
    if (all_positive_degrees_even(g)) {
        cert.verdict = Verdict::True;
        cert.witness = TrailWitness{all_edge_ids(g), std::nullopt};
        cert.note = "eulerian";
        cert.stats.time_ms = ms_since(t0);
        return cert;
    }

    std::vector<char> alive(g.num_edges(), 1);
    CycleSpace cs = build_cycle_space(g, alive);
    if (cs.dim > std::min(caps.cycle_space_dim_cap, 62)) {
        cert.verdict = Verdict::Undetermined;
        cert.note = "cycle space dimension " + std::to_string(cs.dim) + " over cap " +
                    std::to_string(caps.cycle_space_dim_cap);
        cert.stats.time_ms = ms_since(t0);
        return cert;
    }
    MaskScan scan;
    bool found = enumerate_cycle_space(cs, g.num_edges(), cert.stats.nodes,
                                       [&](const EdgeMask& mask) {
                                           scan.scan(g, mask);
                                           if (scan.covered != n || scan.components != 1)
                                               return false;
                                           cert.witness = TrailWitness{mask.ids(), std::nullopt};
                                           return true;
                                       });
    cert.verdict = found ? Verdict::True : Verdict::False;
    if (!found) cert.note = "no spanning closed trail (exhaustive over the cycle space)";
    cert.stats.time_ms = ms_since(t0);
    return cert;
}

OracleCertificate dominating_closed_trail(const MultiGraph& g, const OracleCaps& caps) {
    if (g.num_vertices() == 0)
        throw std::invalid_argument("dominating_closed_trail: empty input");
    auto t0 = Clock::now();
    OracleCertificate cert;
    const int m = g.num_edges();

    // One-vertex trails.
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) == m) {
            cert.verdict = Verdict::True;
            cert.witness = TrailWitness{{}, v};
            cert.stats.time_ms = ms_since(t0);
            return cert;
        }
    }

    // A single closed trail cannot dominate two components that carry edges.
    auto comp = g.components();
    std::vector<char> comp_has_edge;
    for (EdgeId e = 0; e < m; ++e) {
        int c = comp[g.edge(e).u];
        if (c >= static_cast<int>(comp_has_edge.size())) comp_has_edge.resize(c + 1, 0);
        comp_has_edge[c] = 1;
    }
    int edge_comps = std::count(comp_has_edge.begin(), comp_has_edge.end(), 1);
    if (edge_comps >= 2) {
        cert.verdict = Verdict::False;
        cert.note = "edges in more than one component";
        cert.stats.time_ms = ms_since(t0);
        return cert;
    }

    if (all_positive_degrees_even(g)) {
        // The full edge set is one closed trail and trivially dominates.
        cert.verdict = Verdict::True;
        cert.witness = TrailWitness{all_edge_ids(g), std::nullopt};
        cert.note = "eulerian component";
        cert.stats.time_ms = ms_since(t0);
        return cert;
    }

    std::vector<char> alive(m, 1);
    CycleSpace cs = build_cycle_space(g, alive);
    if (cs.dim > std::min(caps.cycle_space_dim_cap, 62)) {
        cert.verdict = Verdict::Undetermined;
        cert.note = "cycle space dimension " + std::to_string(cs.dim) + " over cap " +
                    std::to_string(caps.cycle_space_dim_cap);
        cert.stats.time_ms = ms_since(t0);
        return cert;
    }
    MaskScan scan;
    bool found = enumerate_cycle_space(cs, m, cert.stats.nodes, [&](const EdgeMask& mask) {
        scan.scan(g, mask);
        if (scan.components != 1) return false;
        if (!dominates_all_edges(g, scan)) return false;
        cert.witness = TrailWitness{mask.ids(), std::nullopt};
        return true;
    });
    cert.verdict = found ? Verdict::True : Verdict::False;
    if (!found) cert.note = "no dominating closed trail (exhaustive over the cycle space)";
    cert.stats.time_ms = ms_since(t0);
    return cert;
}

OracleCertificate st_supereulerian(const MultiGraph& g, int s, int t,
                                   const OracleCaps& caps) {
    if (s < 0 || t < 0)
        throw std::invalid_argument("st_supereulerian requires s, t >= 0");
    if (g.num_vertices() == 0)
        throw std::invalid_argument("st_supereulerian: empty input");

    auto t0 = Clock::now();
    OracleCertificate cert;
    const int n = g.num_vertices();
    const int m = g.num_edges();

    long long y_cases = count_subsets_up_to(m, t, caps.witness_case_cap);
    long long case_bound =
        y_cases > caps.witness_case_cap
            ? caps.witness_case_cap + 1
            : y_cases * count_subsets_up_to(m, s, caps.witness_case_cap);
    const bool store = case_bound <= caps.witness_case_cap;
    CaseMapWitness cases;
    bool any_undetermined = false;
    std::string undet_note;

    std::vector<int> degree(n);
    for (int ysize = 0; ysize <= std::min(t, m); ++ysize) {
        bool keep_going = for_each_combination(m, ysize, [&](const std::vector<int>& y) {
            std::vector<char> alive(m, 1);
            for (int e : y) alive[e] = 0;

            // Degrees in g - Y; a spanning trail needs even degree >= 2
            // everywhere, which bounds the quick negative checks.
            std::fill(degree.begin(), degree.end(), 0);
            for (EdgeId e = 0; e < m; ++e)
                if (alive[e]) {
                    degree[g.edge(e).u]++;
                    degree[g.edge(e).v]++;
                }
            if (n >= 2) {
                for (VertexId v = 0; v < n; ++v) {
                    if (degree[v] < 2) {
                        cert.verdict = Verdict::False;
                        cert.witness = EdgeSetsViolation{{}, y};
                        return false;
                    }
                }
            }

            bool eulerian = true;
            for (VertexId v = 0; v < n; ++v)
                if (degree[v] % 2 != 0) eulerian = false;

            CycleSpace cs = build_cycle_space(g, alive);
            // Connectivity of g - Y: tree edges of the BFS forest.
            int alive_count = static_cast<int>(std::count(alive.begin(), alive.end(), 1));
            int tree_edges = alive_count - cs.dim;
            if (n >= 2 && tree_edges != n - 1) {
                cert.verdict = Verdict::False;
                cert.witness = EdgeSetsViolation{{}, y};
                return false;
            }

            if (eulerian) {
                // The full surviving edge set is a spanning closed trail and
                // contains every admissible X.
                if (store) {
                    std::vector<EdgeId> trail;
                    for (EdgeId e = 0; e < m; ++e)
                        if (alive[e]) trail.push_back(e);
                    TrailWitness tw{trail, std::nullopt};
                    if (trail.empty()) tw.trivial_at = 0;  // the one-vertex graph
                    for (int xsize = 0; xsize <= s; ++xsize)
                        for_each_combination(
                            static_cast<int>(trail.size()), xsize,
                            [&](const std::vector<int>& xi) {
                                CaseMapWitness::Case c;
                                for (int i : xi) c.forced.push_back(trail[i]);
                                c.removed = y;
                                c.trail = tw;
                                cases.cases.push_back(std::move(c));
                                return true;
                            });
                }
                return true;
            }

            if (cs.dim > std::min(caps.cycle_space_dim_cap, 62)) {
                any_undetermined = true;
                undet_note = "cycle space dimension " + std::to_string(cs.dim) +
                             " over cap for some deletion pattern";
                return true;  // keep scanning for definite violations
            }

            std::vector<EdgeId> alive_ids;
            for (EdgeId e = 0; e < m; ++e)
                if (alive[e]) alive_ids.push_back(e);

            MaskScan scan;
            for (int xsize = 0; xsize <= std::min(s, static_cast<int>(alive_ids.size()));
                 ++xsize) {
                bool x_ok = for_each_combination(
                    static_cast<int>(alive_ids.size()), xsize,
                    [&](const std::vector<int>& xi) {
                        EdgeMask xmask(m);
                        std::vector<EdgeId> x;
                        for (int i : xi) {
                            xmask.set(alive_ids[i]);
                            x.push_back(alive_ids[i]);
                        }
                        bool found = enumerate_cycle_space(
                            cs, m, cert.stats.nodes, [&](const EdgeMask& mask) {
                                if (!mask.contains(xmask)) return false;
                                scan.scan(g, mask);
                                if (scan.covered != n || scan.components != 1)
                                    return false;
                                if (store) {
                                    CaseMapWitness::Case c;
                                    c.forced = x;
                                    c.removed = y;
                                    c.trail = TrailWitness{mask.ids(), std::nullopt};
                                    cases.cases.push_back(std::move(c));
                                }
                                return true;
                            });
                        if (!found) {
                            cert.verdict = Verdict::False;
                            cert.witness = EdgeSetsViolation{x, y};
                            return false;
                        }
                        return true;
                    });
                if (!x_ok) return false;
            }
            return true;
        });
        if (!keep_going) {
            cert.stats.time_ms = ms_since(t0);
            return cert;
        }
    }

    if (any_undetermined) {
        cert.verdict = Verdict::Undetermined;
        cert.note = undet_note;
    } else {
        cert.verdict = Verdict::True;
        if (store)
            cert.witness = std::move(cases);
        else
            cert.note = "case map elided (over witness cap)";
    }
    cert.stats.time_ms = ms_since(t0);
    return cert;
}

namespace {

// One cycle of length <= 3 through each edge, when such a cover exists.
std::optional<ShortCycleCoverWitness> short_cycle_cover(const MultiGraph& g) {
    ShortCycleCoverWitness w;
    w.cycles.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        // Parallel partner?
        EdgeId partner = -1;
        for (const auto& [nbr, f] : g.incident(ed.u))
            if (f != e && nbr == ed.v) {
                partner = f;
                break;
            }
        if (partner != -1) {
            w.cycles[e] = {e, partner};
            continue;
        }
        // Triangle through a common neighbor.
        bool done = false;
        for (VertexId x : g.neighbors(ed.u)) {
            if (x == ed.v || !g.adjacent(x, ed.v)) continue;
            EdgeId eu = -1, ev = -1;
            for (const auto& [nbr, f] : g.incident(ed.u))
                if (nbr == x) {
                    eu = f;
                    break;
                }
            for (const auto& [nbr, f] : g.incident(ed.v))
                if (nbr == x) {
                    ev = f;
                    break;
                }
            w.cycles[e] = {e, eu, ev};
            done = true;
            break;
        }
        if (!done) return std::nullopt;
    }
    return w;
}

}  // namespace

OracleCertificate collapsible(const MultiGraph& g, const OracleCaps& caps) {
    if (g.num_vertices() == 0)
        throw std::invalid_argument("collapsible: empty input");
    auto t0 = Clock::now();
    OracleCertificate cert;
    const int n = g.num_vertices();
    const int m = g.num_edges();

    if (!g.is_connected()) {
        cert.verdict = Verdict::False;
        cert.witness = OddSetViolation{{}};
        cert.note = "disconnected: no spanning connected subgraph at all";
        cert.stats.time_ms = ms_since(t0);
        return cert;
    }

    // Beyond 20 edges the subset scan and parity table stop being desk scale.
    const int edge_cap = std::min(caps.collapsible_edge_cap, 20);
    if (m > edge_cap) {
        auto cover = short_cycle_cover(g);
        if (cover) {
            cert.verdict = Verdict::True;
            cert.witness = std::move(*cover);
            cert.note = "every edge on a cycle of length <= 3";
        } else {
            cert.verdict = Verdict::Undetermined;
            cert.note = std::to_string(m) + " edges over the exhaustive cap of " +
                        std::to_string(caps.collapsible_edge_cap);
        }
        cert.stats.time_ms = ms_since(t0);
        return cert;
    }

    // Exhaustive: mark which odd-degree patterns are achieved by spanning
    // connected subgraphs. Connectivity forces n <= m + 1 <= cap + 1.
    std::vector<std::uint32_t> vbit(m);
    for (EdgeId e = 0; e < m; ++e)
        vbit[e] = (std::uint32_t(1) << g.edge(e).u) | (std::uint32_t(1) << g.edge(e).v);

    std::vector<std::int64_t> achieved(std::size_t(1) << n, -1);
    std::vector<int> parent(n);
    for (std::uint32_t subset = 0; subset < (std::uint32_t(1) << m); ++subset) {
        cert.stats.nodes++;
        std::uint32_t parity = 0;
        std::iota(parent.begin(), parent.end(), 0);
        int comps = n;
        for (std::uint32_t bits = subset; bits;) {
            int e = std::countr_zero(bits);
            bits &= bits - 1;
            parity ^= vbit[e];
            int a = g.edge(e).u, b = g.edge(e).v;
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            while (parent[b] != b) b = parent[b] = parent[parent[b]];
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
                comps--;
            }
        }
        if (comps == 1 && achieved[parity] < 0) achieved[parity] = subset;
    }

    for (std::uint32_t r = 0; r < (std::uint32_t(1) << n); ++r) {
        if (std::popcount(r) % 2 != 0) continue;
        if (achieved[r] < 0) {
            cert.verdict = Verdict::False;
            OddSetViolation viol;
            for (int v = 0; v < n; ++v)
                if ((r >> v) & 1) viol.odd_set.push_back(v);
            cert.witness = std::move(viol);
            cert.stats.time_ms = ms_since(t0);
            return cert;
        }
    }

    cert.verdict = Verdict::True;
    if ((std::int64_t(1) << (n - 1)) <= caps.witness_case_cap) {
        ParityMapWitness map;
        for (std::uint32_t r = 0; r < (std::uint32_t(1) << n); ++r) {
            if (std::popcount(r) % 2 != 0) continue;
            ParityMapWitness::Entry entry;
            for (int v = 0; v < n; ++v)
                if ((r >> v) & 1) entry.odd_set.push_back(v);
            std::uint32_t subset = static_cast<std::uint32_t>(achieved[r]);
            for (int e = 0; e < m; ++e)
                if ((subset >> e) & 1) entry.edges.push_back(e);
            map.entries.push_back(std::move(entry));
        }
        cert.witness = std::move(map);
    } else {
        cert.note = "parity map elided (over witness cap)";
    }
    cert.stats.time_ms = ms_since(t0);
    return cert;
}

ContractEquivResult collapsible_contract_equiv(const MultiGraph& g,
                                               const std::vector<EdgeId>& h_edges,
                                               const OracleCaps& caps) {
    auto [h, old_ids] = edge_subgraph(g, h_edges);
    OracleCertificate hc = collapsible(h, caps);
    if (hc.verdict == Verdict::False)
        throw std::invalid_argument("collapsible_contract_equiv: subgraph is not collapsible");
    ContractEquivResult res;
    if (hc.verdict == Verdict::Undetermined) return res;
    res.whole = collapsible(g, caps).verdict;
    res.contracted = collapsible(contract(g, h_edges), caps).verdict;
    return res;
}

std::string PredicateSpec::index_name() const {
    switch (kind) {
        case Kind::Hamiltonian: return "h_0";
        case Kind::SHamiltonian: return "h_" + std::to_string(s);
        case Kind::DominatingClosedTrail: return "dct";
        case Kind::Supereulerian: return "s";
        case Kind::StSupereulerian:
            return "i_{" + std::to_string(s) + "," + std::to_string(t) + "}";
        case Kind::Collapsible: return "collapsible";
    }
    return "?";
}

OracleCertificate evaluate_predicate(const MultiGraph& g, const PredicateSpec& pred,
                                     const OracleCaps& caps) {
    OracleCertificate cert;
    switch (pred.kind) {
        case PredicateSpec::Kind::Hamiltonian:
            if (g.num_vertices() < 3) {
                cert.verdict = Verdict::False;
                cert.note = "fewer than 3 vertices";
                return cert;
            }
            return hamiltonian(g);
        case PredicateSpec::Kind::SHamiltonian:
            if (g.num_vertices() < pred.s + 3) {
                cert.verdict = Verdict::False;
                cert.note = "fewer than s + 3 vertices";
                return cert;
            }
            return s_hamiltonian(g, pred.s, caps);
        case PredicateSpec::Kind::DominatingClosedTrail:
            return dominating_closed_trail(g, caps);
        case PredicateSpec::Kind::Supereulerian:
            return spanning_closed_trail(g, caps);
        case PredicateSpec::Kind::StSupereulerian:
            return st_supereulerian(g, pred.s, pred.t, caps);
        case PredicateSpec::Kind::Collapsible:
            return collapsible(g, caps);
    }
    return cert;
}

IndexResult exact_index(const MultiGraph& g, const PredicateSpec& pred,
                        const IndexCaps& caps) {
    IndexResult res;
    res.index_name = pred.index_name();
    MultiGraph cur = g;
    for (int i = 0; i <= caps.max_depth; ++i) {
        if (cur.num_vertices() > caps.predicate_vertex_cap) {
            res.cap_hit = true;
            res.cap_reason = "level " + std::to_string(i) + " has " +
                             std::to_string(cur.num_vertices()) +
                             " vertices, over the predicate cap";
            return res;
        }
        OracleCertificate cert = evaluate_predicate(cur, pred, caps.oracle);
        res.per_level.push_back(cert.verdict);
        if (cert.verdict == Verdict::True) {
            res.value = i;
            return res;
        }
        if (cert.verdict == Verdict::Undetermined) {
            res.cap_hit = true;
            res.cap_reason = "level " + std::to_string(i) + " undetermined: " + cert.note;
            return res;
        }
        if (i == caps.max_depth) {
            res.cap_hit = true;
            res.cap_reason = "depth cap reached";
            return res;
        }
        if (cur.num_edges() == 0) {
            res.cap_hit = true;
            res.cap_reason = "level " + std::to_string(i) + " is edgeless";
            return res;
        }
        if (cur.num_edges() > caps.level_vertex_cap) {
            res.cap_hit = true;
            res.cap_reason = "next level would exceed the level vertex cap";
            return res;
        }
        cur = line_graph(cur);
    }
    return res;
}

// ------------------------------------------------------------------ replay

bool replay_cycle(const MultiGraph& g, const CycleWitness& w) {
    const int n = g.num_vertices();
    if (static_cast<int>(w.order.size()) != n || n < 3) return false;
    std::vector<char> seen(n, 0);
    for (VertexId v : w.order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!g.adjacent(w.order[i], w.order[(i + 1) % n])) return false;
    return true;
}

bool replay_trail(const MultiGraph& g, const TrailWitness& w, bool require_spanning,
                  bool require_dominating) {
    const int n = g.num_vertices();
    if (w.edges.empty()) {
        if (!w.trivial_at || *w.trivial_at < 0 || *w.trivial_at >= n) return false;
        if (require_spanning && n != 1) return false;
        if (require_dominating)
            for (EdgeId e = 0; e < g.num_edges(); ++e)
                if (!g.edge(e).touches(*w.trivial_at)) return false;
        return true;
    }
    std::vector<char> used(g.num_edges(), 0);
    std::vector<int> degree(n, 0);
    for (EdgeId e : w.edges) {
        if (e < 0 || e >= g.num_edges() || used[e]) return false;
        used[e] = 1;
        degree[g.edge(e).u]++;
        degree[g.edge(e).v]++;
    }
    for (int d : degree)
        if (d % 2 != 0) return false;
    // Connectivity over the covered vertices.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (EdgeId e : w.edges) parent[root(g.edge(e).u)] = root(g.edge(e).v);
    int covered_root = root(g.edge(w.edges[0]).u);
    for (VertexId v = 0; v < n; ++v) {
        if (degree[v] > 0 && root(v) != covered_root) return false;
        if (require_spanning && degree[v] == 0) return false;
    }
    if (require_dominating)
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (degree[g.edge(e).u] == 0 && degree[g.edge(e).v] == 0) return false;
    return true;
}

bool replay_parity_map(const MultiGraph& g, const ParityMapWitness& w) {
    const int n = g.num_vertices();
    if (n > 62) return false;
    std::uint64_t expected = n == 0 ? 1 : (std::uint64_t(1) << (n - 1));
    if (w.entries.size() != expected) return false;
    std::vector<char> seen_r(std::size_t(1) << n, 0);
    for (const auto& entry : w.entries) {
        std::uint64_t r = 0;
        for (VertexId v : entry.odd_set) {
            if (v < 0 || v >= n) return false;
            r |= std::uint64_t(1) << v;
        }
        if (std::popcount(r) % 2 != 0 || seen_r[r]) return false;
        seen_r[r] = 1;
        // Spanning connected with odd set exactly R.
        std::vector<char> used(g.num_edges(), 0);
        std::vector<int> degree(n, 0);
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        int comps = n;
        for (EdgeId e : entry.edges) {
            if (e < 0 || e >= g.num_edges() || used[e]) return false;
            used[e] = 1;
            degree[g.edge(e).u]++;
            degree[g.edge(e).v]++;
            int a = root(g.edge(e).u), b = root(g.edge(e).v);
            if (a != b) {
                parent[a] = b;
                comps--;
            }
        }
        if (comps != 1) return false;
        for (VertexId v = 0; v < n; ++v)
            if ((degree[v] % 2 == 1) != (((r >> v) & 1) != 0)) return false;
    }
    return true;
}

bool replay_short_cycle_cover(const MultiGraph& g, const ShortCycleCoverWitness& w) {
    if (static_cast<int>(w.cycles.size()) != g.num_edges()) return false;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& cyc = w.cycles[e];
        if (std::find(cyc.begin(), cyc.end(), e) == cyc.end()) return false;
        for (EdgeId f : cyc)
            if (f < 0 || f >= g.num_edges()) return false;
        if (cyc.size() == 2) {
            auto a = g.edge(cyc[0]).sorted(), b = g.edge(cyc[1]).sorted();
            if (cyc[0] == cyc[1] || a != b) return false;
        } else if (cyc.size() == 3) {
            // Three distinct edges forming a triangle on three vertices.
            if (cyc[0] == cyc[1] || cyc[1] == cyc[2] || cyc[0] == cyc[2]) return false;
            std::vector<int> degree;
            std::vector<VertexId> verts;
            for (EdgeId f : cyc) {
                verts.push_back(g.edge(f).u);
                verts.push_back(g.edge(f).v);
            }
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            if (verts.size() != 3) return false;
        } else {
            return false;
        }
    }
    return true;
}

namespace {

bool replay_case_map(const MultiGraph& g, const PredicateSpec& pred,
                     const CaseMapWitness& w) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    if (pred.kind == PredicateSpec::Kind::SHamiltonian ||
        pred.kind == PredicateSpec::Kind::Hamiltonian) {
        int s = pred.kind == PredicateSpec::Kind::Hamiltonian ? 0 : pred.s;
        long long expected = count_subsets_up_to(n, s, 1'000'000'000);
        if (static_cast<long long>(w.cases.size()) != expected) return false;
        for (const auto& c : w.cases) {
            if (static_cast<int>(c.removed.size()) > s || !c.cycle) return false;
            std::vector<char> gone(n, 0);
            for (int v : c.removed) {
                if (v < 0 || v >= n || gone[v]) return false;
                gone[v] = 1;
            }
            // Cycle over exactly the surviving vertices, adjacency in g.
            const auto& order = c.cycle->order;
            if (static_cast<int>(order.size() + c.removed.size()) != n) return false;
            std::vector<char> seen(n, 0);
            for (VertexId v : order) {
                if (v < 0 || v >= n || gone[v] || seen[v]) return false;
                seen[v] = 1;
            }
            if (order.size() < 3) return false;
            for (std::size_t i = 0; i < order.size(); ++i)
                if (!g.adjacent(order[i], order[(i + 1) % order.size()])) return false;
        }
        return true;
    }
    if (pred.kind == PredicateSpec::Kind::StSupereulerian) {
        long long expected = 0;
        for (int y = 0; y <= std::min(pred.t, m); ++y) {
            long long ycomb = 1;
            for (int i = 0; i < y; ++i) ycomb = ycomb * (m - i) / (i + 1);
            expected += ycomb * count_subsets_up_to(m - y, pred.s, 1'000'000'000);
        }
        if (static_cast<long long>(w.cases.size()) != expected) return false;
        for (const auto& c : w.cases) {
            if (!c.trail) return false;
            if (static_cast<int>(c.forced.size()) > pred.s ||
                static_cast<int>(c.removed.size()) > pred.t)
                return false;
            std::vector<char> removed(m, 0);
            for (int e : c.removed) {
                if (e < 0 || e >= m || removed[e]) return false;
                removed[e] = 1;
            }
            for (int e : c.forced)
                if (e < 0 || e >= m || removed[e]) return false;
            for (EdgeId e : c.trail->edges)
                if (removed[e]) return false;
            std::vector<char> in_trail(m, 0);
            for (EdgeId e : c.trail->edges) in_trail[e] = 1;
            for (EdgeId e : c.forced)
                if (!in_trail[e]) return false;
            if (!replay_trail(g, *c.trail, /*require_spanning=*/true,
                              /*require_dominating=*/false))
                return false;
        }
        return true;
    }
    return false;
}

}  // namespace

std::optional<bool> replay_certificate(const MultiGraph& g, const PredicateSpec& pred,
                                       const OracleCertificate& cert) {
    if (cert.verdict != Verdict::True) return std::nullopt;
    if (std::holds_alternative<CycleWitness>(cert.witness))
        return replay_cycle(g, std::get<CycleWitness>(cert.witness));
    if (std::holds_alternative<TrailWitness>(cert.witness)) {
        bool spanning = pred.kind == PredicateSpec::Kind::Supereulerian;
        bool dominating = pred.kind == PredicateSpec::Kind::DominatingClosedTrail;
        return replay_trail(g, std::get<TrailWitness>(cert.witness), spanning, dominating);
    }
    if (std::holds_alternative<ParityMapWitness>(cert.witness))
        return replay_parity_map(g, std::get<ParityMapWitness>(cert.witness));
    if (std::holds_alternative<ShortCycleCoverWitness>(cert.witness))
        return replay_short_cycle_cover(g, std::get<ShortCycleCoverWitness>(cert.witness));
    if (std::holds_alternative<CaseMapWitness>(cert.witness))
        return replay_case_map(g, pred, std::get<CaseMapWitness>(cert.witness));
    return std::nullopt;
}

}  // namespace lgindex
