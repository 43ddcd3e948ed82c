#pragma once

// Shared generators and independent oracles. The oracles deliberately
// avoid the library code paths they are used to check.

#include <cmath>
#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "sweepmc/model.hpp"
#include "sweepmc/transition_matrix.hpp"

namespace testutil {

using sweepmc::BinaryModel;
using sweepmc::StateIndex;

inline BinaryModel random_table(int n, std::mt19937_64& rng, double spread = 2.0) {
    std::uniform_real_distribution<double> dist(-spread, spread);
    std::vector<double> lw(std::size_t{1} << n);
    for (double& v : lw) v = dist(rng);
    return BinaryModel::table(std::move(lw));
}

/// Table with engineered exact ties: several states share their log
/// weight with a single-site flip partner.
inline BinaryModel tied_table(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const std::size_t size = std::size_t{1} << n;
    std::vector<double> lw(size);
    for (double& v : lw) v = dist(rng);
    std::uniform_int_distribution<StateIndex> state(0, static_cast<StateIndex>(size - 1));
    std::uniform_int_distribution<int> site(1, n);
    const int ties = std::max<int>(1, n);
    for (int k = 0; k < ties; ++k) {
        const StateIndex x = state(rng);
        lw[x ^ (StateIndex{1} << (site(rng) - 1))] = lw[x];
    }
    return BinaryModel::table(std::move(lw));
}

inline BinaryModel random_quadratic(int n, std::mt19937_64& rng, bool with_bias = true) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<std::vector<double>> w(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = dist(rng);
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            w[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    std::vector<double> b;
    if (with_bias) {
        b.resize(static_cast<std::size_t>(n));
        for (double& v : b) v = dist(rng);
    }
    return BinaryModel::quadratic(std::move(w), std::move(b));
}

/// Ising energy by direct coordinate enumeration of neighbour pairs on
/// the grid, independent of IsingLattice's adjacency construction.
inline double ising_energy_oracle(int rows, int cols, bool periodic, double coupling,
                                  StateIndex x) {
    auto spin = [&](int r, int c) {
        const int site = r * cols + c + 1;
        return ((x >> (site - 1)) & 1u) ? 1 : -1;
    };
    double sum = 0.0;
    int counted_pairs = 0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            // Each unordered pair once: look right and down, with wrap
            // only when it does not duplicate an interior edge.
            if (cols > 1) {
                if (c + 1 < cols) {
                    sum += spin(r, c) * spin(r, c + 1);
                    ++counted_pairs;
                } else if (periodic && cols > 2) {
                    sum += spin(r, c) * spin(r, 0);
                    ++counted_pairs;
                }
            }
            if (rows > 1) {
                if (r + 1 < rows) {
                    sum += spin(r, c) * spin(r + 1, c);
                    ++counted_pairs;
                } else if (periodic && rows > 2) {
                    sum += spin(r, c) * spin(0, c);
                    ++counted_pairs;
                }
            }
        }
    }
    (void)counted_pairs;
    return -coupling * sum;
}

/// Reachability by plain BFS from one state over entries above threshold.
inline std::vector<char> bfs_reachable(const sweepmc::TransitionMatrix& T, StateIndex from,
                                       double threshold = 0.0) {
    const std::size_t dim = T.dim();
    std::vector<char> seen(dim, 0);
    std::queue<StateIndex> frontier;
    seen[from] = 1;
    frontier.push(from);
    while (!frontier.empty()) {
        const StateIndex u = frontier.front();
        frontier.pop();
        for (std::size_t y = 0; y < dim; ++y) {
            if (!seen[y] && T(u, static_cast<StateIndex>(y)) > threshold) {
                seen[y] = 1;
                frontier.push(static_cast<StateIndex>(y));
            }
        }
    }
    return seen;
}

/// True iff every state reaches every other state.
inline bool fully_reachable_oracle(const sweepmc::TransitionMatrix& T,
                                   double threshold = 0.0) {
    const std::size_t dim = T.dim();
    for (std::size_t x = 0; x < dim; ++x) {
        const auto seen = bfs_reachable(T, static_cast<StateIndex>(x), threshold);
        for (std::size_t y = 0; y < dim; ++y)
            if (!seen[y]) return false;
    }
    return true;
}

/// Dense matrix product, the slow reference for sweep composition.
inline std::vector<double> matmul_oracle(const std::vector<double>& a,
                                         const std::vector<double>& b, std::size_t dim) {
    std::vector<double> c(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) {
            const double aik = a[i * dim + k];
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < dim; ++j) c[i * dim + j] += aik * b[k * dim + j];
        }
    return c;
}

}  // namespace testutil
