#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "sweepmc/kernel.hpp"

namespace sweepmc {

/// Dense row-stochastic matrix over the full state space: entry (x, y) is
/// the probability of moving from x to y in one application. Rows are
/// indexed by StateIndex with the site-1-is-LSB convention. Limited to
/// kMaxDenseSites sites.
class TransitionMatrix {
public:
    TransitionMatrix(int site_count, std::vector<double> row_major);

    int site_count() const { return n_; }
    std::size_t dim() const { return dim_; }

    double operator()(StateIndex from, StateIndex to) const {
        return entries_[static_cast<std::size_t>(from) * dim_ + to];
    }
    double& at(StateIndex from, StateIndex to) {
        return entries_[static_cast<std::size_t>(from) * dim_ + to];
    }

    const std::vector<double>& entries() const { return entries_; }

    double row_sum(StateIndex from) const;

    /// Largest |row sum - 1| over all rows.
    double max_row_sum_error() const;

private:
    int n_ = 0;
    std::size_t dim_ = 0;
    std::vector<double> entries_;  // row-major, dim x dim
};

/// Exact matrix of the single-site operator: two nonzeros per row, at the
/// current state and its flip image.
TransitionMatrix site_matrix(const BinaryModel& model, const AcceptanceRule& rule, int site);

/// Matrix of one full sweep. The first site in the order acts first, so
/// the product composes left to right in row-vector convention.
TransitionMatrix sweep_matrix(const SweepKernel& kernel);

/// Max-norm of p^T T - p^T for the exactly normalized model distribution.
double stationary_residual(const TransitionMatrix& T, const BinaryModel& model);

/// Binary dump: magic "SWMX", format version, site count, a convention tag
/// string, then row-major float64 entries (native-endian).
void dump_matrix(const TransitionMatrix& T, std::ostream& out);
TransitionMatrix load_matrix(std::istream& in);

/// Full eigenvalue analysis of a row-stochastic matrix.
struct SpectralReport {
    double gap = 0.0;              // 1 - lambda2_modulus, forced to 0 when tied with the top
    double lambda2_modulus = 0.0;  // second largest eigenvalue modulus, counting multiplicity
    std::vector<double> eigenvalue_moduli;  // all moduli, sorted descending
};

/// Eigenvalue moduli beyond the guaranteed top eigenvalue 1 that come
/// within this band of the top modulus force the reported gap to exactly 0.
inline constexpr double kSpectralTieBand = 1e-9;

/// Computes all eigenvalue moduli of the (generally non-symmetric) matrix
/// via a complete dense eigendecomposition and reports the spectral gap.
SpectralReport spectral_gap(const TransitionMatrix& T);

}  // namespace sweepmc
