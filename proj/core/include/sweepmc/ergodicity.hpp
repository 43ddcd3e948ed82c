#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sweepmc/transition_matrix.hpp"

namespace sweepmc {

/// Matrix entries strictly above this threshold count as possible
/// transitions. Sweep-matrix entries are sums of products of nonnegative
/// factors, so structural zeros are exact in floating point and strict
/// positivity is the safe default. Genuine one-sweep probabilities can be
/// arbitrarily small at strong couplings (below 1e-40 for a 3x3 lattice at
/// J = 2), so any fixed positive threshold would cut real edges there.
inline constexpr double kDefaultSupportThreshold = 0.0;

/// Directed reachability graph of a transition matrix, in CSR form.
struct SupportGraph {
    int n = 0;
    std::size_t vertex_count = 0;
    std::vector<std::size_t> offsets;   // size vertex_count + 1
    std::vector<StateIndex> targets;    // ascending within each row

    std::span<const StateIndex> successors(StateIndex v) const {
        return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
    }
};

SupportGraph support_graph(const TransitionMatrix& T,
                           double threshold = kDefaultSupportThreshold);

/// Strongly connected components (Tarjan). Components are emitted in
/// reverse topological order of the condensation; members are sorted.
struct SccResult {
    int count = 0;
    std::vector<int> component;                    // per vertex
    std::vector<std::vector<StateIndex>> members;  // per component
};

SccResult strongly_connected_components(const SupportGraph& graph);

/// A minimal proper subset the chain cannot leave (a sink component of the
/// condensation), or nullopt when the chain is irreducible. The returned
/// set keeps all of its rows' probability mass inside itself.
std::optional<std::vector<StateIndex>> find_closed_set(
    const TransitionMatrix& T, double threshold = kDefaultSupportThreshold);

/// Period of the recurrent class containing the maximum-probability state
/// (the whole space when irreducible), plus the self-loop witness at that
/// state, which forces period one when present.
struct PeriodInfo {
    bool aperiodic = false;
    int period = 0;
    StateIndex reference_state = 0;
    bool reference_self_loop = false;
};

PeriodInfo is_aperiodic(const TransitionMatrix& T, const BinaryModel& model,
                        double threshold = kDefaultSupportThreshold);

struct ErgodicityReport {
    bool irreducible = false;
    bool aperiodic = false;
    bool ergodic = false;  // irreducible and aperiodic
    int period = 0;
    int scc_count = 0;
    StateIndex reference_state = 0;
    bool reference_self_loop = false;
    std::optional<std::vector<StateIndex>> closed_set_witness;
};

/// Full analysis of an already-built sweep matrix.
ErgodicityReport analyze_ergodicity(const TransitionMatrix& T, const BinaryModel& model,
                                    double threshold = kDefaultSupportThreshold);

/// Builds the sweep matrix for the kernel and analyzes it.
ErgodicityReport check_ergodic(const SweepKernel& kernel,
                               double threshold = kDefaultSupportThreshold);

}  // namespace sweepmc
