#include "sweepmc/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace sweepmc {

std::string to_string(AcceptanceKind kind) {
    switch (kind) {
        case AcceptanceKind::Standard: return "standard";
        case AcceptanceKind::Modified: return "modified";
        case AcceptanceKind::Gibbs: return "gibbs";
    }
    throw InvalidInputError("unknown acceptance kind");
}

AcceptanceKind acceptance_kind_from_string(const std::string& name) {
    if (name == "standard") return AcceptanceKind::Standard;
    if (name == "modified") return AcceptanceKind::Modified;
    if (name == "gibbs") return AcceptanceKind::Gibbs;
    throw InvalidInputError("unknown acceptance rule '" + name +
                            "' (expected standard, modified, or gibbs)");
}

double accept_prob(const AcceptanceRule& rule, double dlogp) {
    if (!std::isfinite(dlogp)) throw InvalidInputError("dlogp must be finite");
    switch (rule.kind) {
        case AcceptanceKind::Standard:
            return dlogp >= 0.0 ? 1.0 : std::exp(dlogp);
        case AcceptanceKind::Modified:
            if (dlogp > rule.tie_tolerance) return 1.0;
            if (dlogp < -rule.tie_tolerance) return std::exp(dlogp);
            return 0.5;
        case AcceptanceKind::Gibbs:
            return 1.0 / (1.0 + std::exp(-dlogp));
    }
    throw InvalidInputError("unknown acceptance kind");
}

SweepOrder::SweepOrder(std::vector<int> sites, std::string name)
    : sites_(std::move(sites)), name_(std::move(name)) {
    const int n = static_cast<int>(sites_.size());
    detail::require_site_count(n);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int s : sites_) {
        detail::require_site(s, n);
        if (seen[static_cast<std::size_t>(s - 1)]++)
            throw InvalidInputError("sweep order must visit each site exactly once");
    }
}

SweepOrder SweepOrder::linear(int n) {
    detail::require_site_count(n);
    std::vector<int> sites(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sites[static_cast<std::size_t>(i)] = i + 1;
    return SweepOrder(std::move(sites), "linear");
}

SweepOrder SweepOrder::chessboard(int rows, int cols) {
    if (rows < 1 || cols < 1) throw InvalidInputError("lattice dimensions must be positive");
    std::vector<int> sites;
    sites.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int color = 0; color < 2; ++color)
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if ((r + c) % 2 == color) sites.push_back(r * cols + c + 1);
    return SweepOrder(std::move(sites), "chessboard");
}

SweepOrder SweepOrder::custom(std::vector<int> sites) {
    return SweepOrder(std::move(sites), "custom");
}

SweepOrder SweepOrder::cyclic_shift(int n, int shift) {
    detail::require_site_count(n);
    if (shift < 0 || shift >= n) throw InvalidInputError("shift must be in [0, n)");
    std::vector<int> sites(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sites[static_cast<std::size_t>(i)] = (i + shift) % n + 1;
    return SweepOrder(std::move(sites), shift == 0 ? "linear" : "shift" + std::to_string(shift));
}

SweepKernel::SweepKernel(const BinaryModel& model, AcceptanceRule rule, SweepOrder order)
    : model_(&model), rule_(rule), order_(std::move(order)) {
    if (order_.site_count() != model.site_count())
        throw InvalidInputError("sweep order length must match the model's site count");
}

double SweepKernel::site_flip_prob(StateIndex x, int site) const {
    return accept_prob(rule_, model_->flip_log_ratio(x, site));
}

StateIndex SweepKernel::sweep_once(StateIndex x, Philox4x32& rng) const {
    for (int site : order_.sites()) {
        const double u = rng.next_uniform();
        if (u < site_flip_prob(x, site)) x ^= StateIndex{1} << (site - 1);
    }
    return x;
}

}  // namespace sweepmc
