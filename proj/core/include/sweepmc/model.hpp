#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "sweepmc/state.hpp"

namespace sweepmc {

/// Probabilities are compared in the log domain; two states tie when the
/// magnitude of their log-probability difference is at most this tolerance.
inline constexpr double kDefaultTieTolerance = 1e-12;

/// Two-dimensional nearest-neighbour lattice with uniform coupling and no
/// external field. Sites are numbered row-major, top-left first, 1-based,
/// so site(r, c) = r * cols + c + 1 for 0-based (r, c). With the periodic
/// flag set, sites on one edge couple to the opposite edge; each unordered
/// neighbour pair appears exactly once.
struct IsingLattice {
    int rows = 0;
    int cols = 0;
    bool periodic = false;
    double coupling = 0.0;
    std::vector<std::pair<int, int>> neighbor_pairs;  // 1-based sites, first < second
    std::vector<std::vector<int>> adjacency;          // adjacency[site - 1]

    static IsingLattice make(int rows, int cols, bool periodic, double coupling);

    int site_count() const { return rows * cols; }
    int site_of(int row, int col) const { return row * cols + col + 1; }
};

/// Unnormalized log-probability for every state, indexed by StateIndex.
struct ExplicitTable {
    int n = 0;
    std::vector<double> log_weights;  // size 2^n, all finite
};

/// E(x) = -sum_{i<j} W_ij s_i s_j - sum_i b_i s_i over spins s in {-1,+1}.
/// W is symmetric with zero diagonal; b defaults to zero.
struct QuadraticEnergy {
    int n = 0;
    std::vector<double> weights;  // n x n, row-major
    std::vector<double> bias;     // size n

    double weight(int i, int j) const {
        return weights[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(j - 1)];
    }
};

struct TieViolation {
    StateIndex state = 0;
    int site = 0;
};

/// Result of scanning all (state, site) pairs for equal-probability flips.
struct TieReport {
    bool tie_free = true;
    double tolerance = kDefaultTieTolerance;
    std::vector<TieViolation> violations;
};

/// A full-support unnormalized distribution over binary state vectors.
///
/// Models are immutable after construction; all member functions are pure
/// and safe to call concurrently.
class BinaryModel {
public:
    static BinaryModel ising(int rows, int cols, bool periodic, double coupling);
    static BinaryModel table(std::vector<double> log_weights);
    static BinaryModel quadratic(std::vector<std::vector<double>> weights,
                                 std::vector<double> bias = {});

    int site_count() const { return n_; }

    double energy(StateIndex x) const;

    /// Unnormalized log-probability, -energy(x).
    double log_weight(StateIndex x) const { return -energy(x); }

    /// log p(y) - log p(x), computed as energy(x) - energy(y) so that
    /// log_prob_ratio(x, y) == -log_prob_ratio(y, x) exactly.
    double log_prob_ratio(StateIndex x, StateIndex y) const;

    /// log p(f_i(x)) - log p(x) via the local energy difference of the
    /// flipped site. Exactly antisymmetric under flipping back.
    double flip_log_ratio(StateIndex x, int site) const;

    /// Exactly normalized distribution over all 2^n states (log-sum-exp).
    std::vector<double> exact_distribution() const;

    /// Scan all n * 2^n (state, site) pairs for |flip_log_ratio| <= tol.
    TieReport check_tie_condition(double tol = kDefaultTieTolerance) const;

    const IsingLattice* ising_lattice() const { return std::get_if<IsingLattice>(&form_); }
    const ExplicitTable* explicit_table() const { return std::get_if<ExplicitTable>(&form_); }
    const QuadraticEnergy* quadratic_energy() const { return std::get_if<QuadraticEnergy>(&form_); }

private:
    using Form = std::variant<IsingLattice, ExplicitTable, QuadraticEnergy>;

    BinaryModel(Form form, int n) : form_(std::move(form)), n_(n) {}

    Form form_;
    int n_ = 0;
};

}  // namespace sweepmc
