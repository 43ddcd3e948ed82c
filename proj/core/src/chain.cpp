#include "sweepmc/chain.hpp"

#include <cmath>

namespace sweepmc {

ChainResult run_chain(const SweepKernel& kernel, StateIndex start, const ChainOptions& options) {
    const int n = kernel.site_count();
    detail::require_state(start, n);
    if (options.sweeps == 0 || options.sweeps <= options.burn_in)
        throw InvalidInputError("need sweeps > burn_in >= 0");

    ChainResult result;
    result.trajectory.initial = start;
    result.trajectory.after_sweep.reserve(options.sweeps);
    if (options.record_substeps)
        result.trajectory.substeps.reserve(options.sweeps * static_cast<std::uint64_t>(n));
    result.summary.total_sweeps = options.sweeps;
    result.summary.burn_in = options.burn_in;

    Philox4x32 rng(options.seed, options.stream);
    StateIndex x = start;
    for (std::uint64_t sweep = 1; sweep <= options.sweeps; ++sweep) {
        if (options.record_substeps) {
            for (int site : kernel.order().sites()) {
                const double u = rng.next_uniform();
                if (u < kernel.site_flip_prob(x, site)) x ^= StateIndex{1} << (site - 1);
                result.trajectory.substeps.push_back(x);
            }
        } else {
            x = kernel.sweep_once(x, rng);
        }
        result.trajectory.after_sweep.push_back(x);
        if (sweep > options.burn_in) ++result.summary.visit_counts[x];
    }
    if (n <= kMaxDenseSites)
        result.summary.tv_distance_to_exact = tv_distance(result.summary, kernel.model());
    return result;
}

double tv_distance(const EmpiricalSummary& summary, const BinaryModel& model) {
    const int n = model.site_count();
    if (n > kMaxDenseSites)
        throw ResourceLimitError("exact normalization is limited to " +
                                 std::to_string(kMaxDenseSites) + " sites");
    const std::uint64_t counted = summary.total_sweeps - summary.burn_in;
    if (counted == 0) throw InvalidInputError("summary has no counted sweeps");
    const std::vector<double> p = model.exact_distribution();
    double distance = 0.0;
    for (StateIndex x = 0; x < state_count(n); ++x) {
        const auto it = summary.visit_counts.find(x);
        const double empirical =
            it == summary.visit_counts.end()
                ? 0.0
                : static_cast<double>(it->second) / static_cast<double>(counted);
        distance += std::abs(empirical - p[x]);
    }
    return 0.5 * distance;
}

std::string render_lattice(StateIndex x, int rows, int cols) {
    if (rows < 1 || cols < 1) throw InvalidInputError("lattice dimensions must be positive");
    const int n = rows * cols;
    detail::require_site_count(n);
    detail::require_state(x, n);
    std::string out;
    out.reserve(static_cast<std::size_t>(rows) * (2 * static_cast<std::size_t>(cols)));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c > 0) out += ' ';
            out += site_bit(x, r * cols + c + 1) ? '+' : '-';
        }
        out += '\n';
    }
    return out;
}

}  // namespace sweepmc
