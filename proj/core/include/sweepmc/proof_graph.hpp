#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sweepmc/state.hpp"

namespace sweepmc {

using ProofEdge = std::pair<StateIndex, StateIndex>;

/// Directed graph on the full state space whose edges encode, for a subset
/// S, the strict probability inequalities forced between prefix-flip and
/// suffix-flip images whenever a state of S has a neighbour outside S.
///
/// Each generating pair (x in S, site i with f_i(x) outside S) contributes
/// one prefix edge and one suffix edge. Distinct generators can produce
/// the same ordered pair; `edges` collapses them, `multiplicities` keeps
/// the generator counts, and the degree tables count generators so the
/// in/out balance bookkeeping is exact.
class ProofGraph {
public:
    ProofGraph(int site_count, std::vector<StateIndex> subset,
               std::vector<ProofEdge> generated_edges);

    int site_count() const { return n_; }
    const std::vector<StateIndex>& subset() const { return subset_; }

    /// Distinct edges, sorted lexicographically.
    const std::vector<ProofEdge>& edges() const { return edges_; }

    /// Generator count per distinct edge, parallel to edges().
    const std::vector<int>& multiplicities() const { return multiplicities_; }

    /// Number of distinct edges produced by more than one generator.
    int duplicate_edge_count() const;

    /// Total generated edges, counting multiplicity.
    std::size_t generated_edge_count() const { return generated_count_; }

    int out_degree(StateIndex v) const;  // counting generator multiplicity
    int in_degree(StateIndex v) const;

    /// Vertices incident to at least one edge, ascending.
    std::vector<StateIndex> touched_vertices() const;

private:
    int n_ = 0;
    std::vector<StateIndex> subset_;
    std::vector<ProofEdge> edges_;
    std::vector<int> multiplicities_;
    std::size_t generated_count_ = 0;
    std::vector<std::pair<StateIndex, std::pair<int, int>>> degrees_;  // (v, (out, in)), sorted
};

/// Builds the graph for subset S: for every x in S and site i with f_i(x)
/// outside S, inserts the prefix edge (f_{<=i-1}(x), f_{<=i}(x)) and the
/// suffix edge (f_{>=i}(x), f_{>=i+1}(x)).
ProofGraph edge_set(const std::vector<StateIndex>& subset, int site_count);

/// True iff every vertex has equal in- and out-degree (generator counts).
bool degree_balance(const ProofGraph& graph);

/// First directed cycle in deterministic DFS order (roots and successors
/// ascending by state index), as a vertex list [v0, ..., vk] with edges
/// v0 -> v1 -> ... -> vk -> v0; nullopt when the graph is acyclic.
std::optional<std::vector<StateIndex>> find_cycle(const ProofGraph& graph);

/// Which branch of the incremental edge-set construction applied.
enum class InductionCase {
    NoOverlapComplementInSubset,  // no flip image of x' lies in S; complement of x' does
    NoOverlapDisjoint,            // no flip image of x' lies in S; union is disjoint
    Overlap,                      // some flip images of x' lie in S; edges are removed
};

/// Outcome of rebuilding E(S + {x'}) incrementally from E(S) and E({x'})
/// and comparing against the direct definition.
struct InductionReport {
    InductionCase branch = InductionCase::NoOverlapDisjoint;
    std::vector<int> overlap_sites;  // sites i with f_i(x') in S
    bool agrees = false;             // incremental == direct, with generator counts
    bool removed_edges_pair_up = false;  // each removed E({x'}) edge reversed among removed E(S) edges
    bool union_disjoint = false;         // diagnostic for the no-overlap branch
    bool set_equal_to_base = false;      // diagnostic: edge sets E(S') == E(S)
    int duplicate_generators = 0;        // duplicate count in the direct E(S + {x'})
};

/// Machine-checks one induction step: constructs E(S + {x'}) (a) directly
/// and (b) incrementally (union of E(S) and E({x'}), minus, per site i
/// with f_i(x') in S, one generator copy of the two edges produced by
/// (f_i(x'), i) in S and of the two produced by (x', i)).
InductionReport verify_induction_step(const std::vector<StateIndex>& subset, StateIndex extra,
                                      int site_count);

}  // namespace sweepmc
