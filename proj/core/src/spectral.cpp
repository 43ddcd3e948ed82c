#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "sweepmc/transition_matrix.hpp"

namespace sweepmc {

SpectralReport spectral_gap(const TransitionMatrix& T) {
    const auto dim = static_cast<Eigen::Index>(T.dim());
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        mapped(T.entries().data(), dim, dim);

    // |lambda2| may be attained by complex or negative eigenvalues (a
    // period-2 chain has lambda = -1), so the full spectrum is needed.
    Eigen::EigenSolver<Eigen::MatrixXd> solver(mapped, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigendecomposition failed to converge (dim " +
                             std::to_string(dim) + ")");

    SpectralReport report;
    report.eigenvalue_moduli.resize(static_cast<std::size_t>(dim));
    const auto& values = solver.eigenvalues();
    for (Eigen::Index i = 0; i < dim; ++i)
        report.eigenvalue_moduli[static_cast<std::size_t>(i)] = std::abs(values[i]);
    std::sort(report.eigenvalue_moduli.begin(), report.eigenvalue_moduli.end(),
              std::greater<double>());

    const double top = report.eigenvalue_moduli[0];
    if (std::abs(top - 1.0) > 1e-6)
        throw NumericalError("top eigenvalue modulus " + std::to_string(top) +
                             " is not 1; input is not row-stochastic or the solver failed");
    report.lambda2_modulus = report.eigenvalue_moduli[1];

    // A second modulus inside the tie band means the chain is reducible or
    // periodic and must report exactly 0, not rounding noise.
    if (top - report.lambda2_modulus <= kSpectralTieBand)
        report.gap = 0.0;
    else
        report.gap = std::clamp(1.0 - report.lambda2_modulus, 0.0, 1.0);
    return report;
}

}  // namespace sweepmc
