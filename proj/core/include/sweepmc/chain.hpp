#pragma once

#include <optional>
#include <string>
#include <unordered_map>

#include "sweepmc/kernel.hpp"

namespace sweepmc {

struct ChainOptions {
    std::uint64_t sweeps = 0;
    std::uint64_t burn_in = 0;  // sweeps discarded before counting visits
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;  // rng stream id, one per concurrent chain
    bool record_substeps = false;
};

/// States visited by one seeded chain. Substeps, when recorded, hold the
/// state after every single site update (site_count entries per sweep).
struct Trajectory {
    StateIndex initial = 0;
    std::vector<StateIndex> after_sweep;
    std::vector<StateIndex> substeps;
};

struct EmpiricalSummary {
    std::unordered_map<StateIndex, std::uint64_t> visit_counts;  // post burn-in
    std::uint64_t total_sweeps = 0;
    std::uint64_t burn_in = 0;
    std::optional<double> tv_distance_to_exact;  // filled when site count <= kMaxDenseSites
};

struct ChainResult {
    Trajectory trajectory;
    EmpiricalSummary summary;
};

/// Runs one chain; deterministic given (seed, stream). Counts the state
/// after each sweep past burn-in, so counts sum to sweeps - burn_in.
ChainResult run_chain(const SweepKernel& kernel, StateIndex start, const ChainOptions& options);

/// Half the L1 distance between the empirical visit distribution and the
/// exactly normalized model distribution.
double tv_distance(const EmpiricalSummary& summary, const BinaryModel& model);

/// Text grid of +/- spins, row-major top-left first, matching the site
/// numbering of lattice models.
std::string render_lattice(StateIndex x, int rows, int cols);

}  // namespace sweepmc
