#pragma once

#include <span>
#include <string>
#include <vector>

#include "sweepmc/model.hpp"
#include "sweepmc/rng.hpp"

namespace sweepmc {

enum class AcceptanceKind {
    Standard,  // accept with min(1, ratio); ties accept with probability 1
    Modified,  // like Standard but ties accept with probability 1/2
    Gibbs,     // Boltzmann acceptance ratio / (1 + ratio)
};

/// Single-site acceptance function. The tie tolerance only matters for the
/// Modified kind, where |dlogp| <= tie_tolerance counts as a tie.
struct AcceptanceRule {
    AcceptanceKind kind = AcceptanceKind::Standard;
    double tie_tolerance = kDefaultTieTolerance;

    static AcceptanceRule standard() { return {AcceptanceKind::Standard, kDefaultTieTolerance}; }
    static AcceptanceRule modified(double tol = kDefaultTieTolerance) {
        return {AcceptanceKind::Modified, tol};
    }
    static AcceptanceRule gibbs() { return {AcceptanceKind::Gibbs, kDefaultTieTolerance}; }
};

std::string to_string(AcceptanceKind kind);
AcceptanceKind acceptance_kind_from_string(const std::string& name);

/// Probability of accepting a proposed flip given
/// dlogp = log p(proposal) - log p(current). Monotone nondecreasing in
/// dlogp with range within [0, 1].
double accept_prob(const AcceptanceRule& rule, double dlogp);

/// A fixed permutation of sites 1..n visited once per sweep.
class SweepOrder {
public:
    /// 1, 2, ..., n.
    static SweepOrder linear(int n);

    /// Lattice two-colouring: sites with (row + col) even first in
    /// row-major order, then the odd-coloured sites.
    static SweepOrder chessboard(int rows, int cols);

    /// Any permutation of 1..n.
    static SweepOrder custom(std::vector<int> sites);

    /// Linear order rotated left by `shift`: k+1, ..., n, 1, ..., k.
    static SweepOrder cyclic_shift(int n, int shift);

    std::span<const int> sites() const { return sites_; }
    int site_count() const { return static_cast<int>(sites_.size()); }
    const std::string& name() const { return name_; }

private:
    SweepOrder(std::vector<int> sites, std::string name);

    std::vector<int> sites_;
    std::string name_;
};

/// One full fixed-order update step: the site operators applied in order,
/// each proposing to flip its site and accepting per the rule. Immutable;
/// holds a reference to the model, which must outlive the kernel.
class SweepKernel {
public:
    SweepKernel(const BinaryModel& model, AcceptanceRule rule, SweepOrder order);

    /// Probability that the site operator moves x to f_i(x); it stays with
    /// the complementary probability and can reach no other state.
    double site_flip_prob(StateIndex x, int site) const;

    /// Apply all n site operators in order, consuming exactly n uniform
    /// draws (one per site, even when acceptance is 0 or 1).
    StateIndex sweep_once(StateIndex x, Philox4x32& rng) const;

    const BinaryModel& model() const { return *model_; }
    const AcceptanceRule& rule() const { return rule_; }
    const SweepOrder& order() const { return order_; }
    int site_count() const { return model_->site_count(); }

private:
    const BinaryModel* model_;
    AcceptanceRule rule_;
    SweepOrder order_;
};

}  // namespace sweepmc
