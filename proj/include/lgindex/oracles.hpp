#pragma once

#include <optional>
#include <string>
#include <variant>

#include "lgindex/multigraph.hpp"

namespace lgindex {

enum class Verdict { True, False, Undetermined };
const char* to_string(Verdict v);

struct SearchStats {
    long long nodes = 0;
    double time_ms = 0.0;
};

// Positive witnesses. Each kind re-validates against the graph without
// consulting the search that produced it.
struct CycleWitness {
    std::vector<VertexId> order;  // spanning cycle, each vertex once
};

struct TrailWitness {
    // Edge set of a closed trail: even degrees, connected on the covered
    // vertices. An empty edge set with trivial_at set is the one-vertex trail.
    std::vector<EdgeId> edges;
    std::optional<VertexId> trivial_at;
};

struct ParityMapWitness {
    struct Entry {
        std::vector<VertexId> odd_set;  // R, ascending
        std::vector<EdgeId> edges;      // spanning connected subgraph with O = R
    };
    std::vector<Entry> entries;  // one entry per even-size R
};

// One cycle of length 2 or 3 through every edge; a sufficient condition for
// collapsibility used when the exhaustive search is over its cap.
struct ShortCycleCoverWitness {
    std::vector<std::vector<EdgeId>> cycles;  // indexed by edge id
};

// Positive witness for the universally quantified oracles, stored only while
// the number of cases stays small.
struct CaseMapWitness {
    struct Case {
        std::vector<int> removed;          // deleted vertices or edges
        std::vector<int> forced;           // edges the trail must traverse
        std::optional<CycleWitness> cycle;
        std::optional<TrailWitness> trail;
    };
    std::vector<Case> cases;
};

// Negative witnesses.
struct VertexSetViolation {
    std::vector<VertexId> removed;
};
struct EdgeSetsViolation {
    std::vector<EdgeId> forced;   // X
    std::vector<EdgeId> removed;  // Y
};
struct OddSetViolation {
    std::vector<VertexId> odd_set;  // R with no spanning connected subgraph
};

using WitnessVar =
    std::variant<std::monostate, CycleWitness, TrailWitness, ParityMapWitness,
                 ShortCycleCoverWitness, CaseMapWitness, VertexSetViolation,
                 EdgeSetsViolation, OddSetViolation>;

struct OracleCertificate {
    Verdict verdict = Verdict::Undetermined;
    WitnessVar witness;
    SearchStats stats;
    std::string note;

    bool is_true() const { return verdict == Verdict::True; }
    bool is_false() const { return verdict == Verdict::False; }
    bool determined() const { return verdict != Verdict::Undetermined; }
};

struct OracleCaps {
    // Even-subgraph searches enumerate the cycle space; beyond this dimension
    // the answer is reported as undetermined rather than guessed.
    int cycle_space_dim_cap = 20;
    // Exhaustive collapsibility scans every edge subset up to this size.
    int collapsible_edge_cap = 14;
    // Universal oracles keep their per-case witness map up to this many cases.
    int witness_case_cap = 1024;
};

// Spanning cycle, exact backtracking with degree and connectivity pruning.
// Requires at least 3 vertices.
OracleCertificate hamiltonian(const MultiGraph& g);

// Every deletion of up to s vertices leaves a Hamiltonian graph.
// Requires s <= |V| - 3.
OracleCertificate s_hamiltonian(const MultiGraph& g, int s, const OracleCaps& caps = {});

// Closed trail (possibly one vertex) whose vertex set dominates every edge.
OracleCertificate dominating_closed_trail(const MultiGraph& g, const OracleCaps& caps = {});

// Spanning closed trail: connected even subgraph touching every vertex.
OracleCertificate spanning_closed_trail(const MultiGraph& g, const OracleCaps& caps = {});

// For all disjoint X, Y with |X| <= s, |Y| <= t: g - Y has a spanning closed
// trail through X.
OracleCertificate st_supereulerian(const MultiGraph& g, int s, int t,
                                   const OracleCaps& caps = {});

// For every even-size R there is a spanning connected subgraph whose odd
// degree set is exactly R.
OracleCertificate collapsible(const MultiGraph& g, const OracleCaps& caps = {});

struct ContractEquivResult {
    Verdict whole = Verdict::Undetermined;       // collapsible(g)
    Verdict contracted = Verdict::Undetermined;  // collapsible(g / h)
    bool determined() const {
        return whole != Verdict::Undetermined && contracted != Verdict::Undetermined;
    }
    bool agree() const { return determined() && whole == contracted; }
};

// Checks collapsible(g) against collapsible(g/h) for a collapsible subgraph h
// given by its edge set. Throws when h is not collapsible.
ContractEquivResult collapsible_contract_equiv(const MultiGraph& g,
                                               const std::vector<EdgeId>& h_edges,
                                               const OracleCaps& caps = {});

struct PredicateSpec {
    enum class Kind {
        Hamiltonian,
        SHamiltonian,
        DominatingClosedTrail,
        Supereulerian,
        StSupereulerian,
        Collapsible,
    };
    Kind kind = Kind::Hamiltonian;
    int s = 0;
    int t = 0;

    std::string index_name() const;
};

// Evaluate the predicate on one graph; never throws for too-small inputs
// (they simply fail the predicate).
OracleCertificate evaluate_predicate(const MultiGraph& g, const PredicateSpec& pred,
                                     const OracleCaps& caps = {});

struct IndexCaps {
    int max_depth = 16;
    int level_vertex_cap = 200'000;
    // Hamiltonicity-family predicates are only attempted while the level
    // stays under this many vertices.
    int predicate_vertex_cap = 2000;
    OracleCaps oracle;
};

struct IndexResult {
    std::string index_name;
    std::optional<int> value;
    bool cap_hit = false;
    std::string cap_reason;
    std::vector<Verdict> per_level;
};

// Least level of the tower satisfying the predicate, walking from level 0.
IndexResult exact_index(const MultiGraph& g, const PredicateSpec& pred,
                        const IndexCaps& caps = {});

// Witness replay. Returns nullopt when the certificate carries nothing
// checkable (undetermined, or a positive whose case map was elided).
std::optional<bool> replay_certificate(const MultiGraph& g, const PredicateSpec& pred,
                                       const OracleCertificate& cert);

bool replay_cycle(const MultiGraph& g, const CycleWitness& w);
bool replay_trail(const MultiGraph& g, const TrailWitness& w, bool require_spanning,
                  bool require_dominating);
bool replay_parity_map(const MultiGraph& g, const ParityMapWitness& w);
bool replay_short_cycle_cover(const MultiGraph& g, const ShortCycleCoverWitness& w);

}  // namespace lgindex
