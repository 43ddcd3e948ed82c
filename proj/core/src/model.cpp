#include "sweepmc/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace sweepmc {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw InvalidInputError(std::string(what) + " must be finite");
}

}  // namespace

IsingLattice IsingLattice::make(int rows, int cols, bool periodic, double coupling) {
    if (rows < 1 || cols < 1) throw InvalidInputError("lattice dimensions must be positive");
    const long total = static_cast<long>(rows) * cols;
    if (total > kMaxSites)
        throw InvalidInputError("lattice has " + std::to_string(total) + " sites, cap is " +
                                std::to_string(kMaxSites));
    require_finite(coupling, "coupling");

    IsingLattice lat;
    lat.rows = rows;
    lat.cols = cols;
    lat.periodic = periodic;
    lat.coupling = coupling;

    // Collect each unordered pair once; periodic wrap edges can coincide
    // with interior edges when a dimension is 2, and degenerate to self
    // pairs when a dimension is 1.
    std::set<std::pair<int, int>> pairs;
    auto add = [&](int a, int b) {
        if (a == b) return;
        pairs.emplace(std::min(a, b), std::max(a, b));
    };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int s = lat.site_of(r, c);
            if (c + 1 < cols)
                add(s, lat.site_of(r, c + 1));
            else if (periodic)
                add(s, lat.site_of(r, 0));
            if (r + 1 < rows)
                add(s, lat.site_of(r + 1, c));
            else if (periodic)
                add(s, lat.site_of(0, c));
        }
    }
    lat.neighbor_pairs.assign(pairs.begin(), pairs.end());
    lat.adjacency.assign(static_cast<std::size_t>(lat.site_count()), {});
    for (const auto& [a, b] : lat.neighbor_pairs) {
        lat.adjacency[static_cast<std::size_t>(a - 1)].push_back(b);
        lat.adjacency[static_cast<std::size_t>(b - 1)].push_back(a);
    }
    return lat;
}

BinaryModel BinaryModel::ising(int rows, int cols, bool periodic, double coupling) {
    IsingLattice lat = IsingLattice::make(rows, cols, periodic, coupling);
    const int n = lat.site_count();
    return BinaryModel(Form(std::move(lat)), n);
}

BinaryModel BinaryModel::table(std::vector<double> log_weights) {
    const std::size_t size = log_weights.size();
    if (size < 2 || (size & (size - 1)) != 0)
        throw InvalidInputError("table size must be a power of two >= 2, got " +
                                std::to_string(size));
    int n = 0;
    while ((std::size_t{1} << n) < size) ++n;
    if (n > kMaxSites) throw InvalidInputError("table implies more than kMaxSites sites");
    for (double lw : log_weights)
        if (!std::isfinite(lw))
            throw InvalidInputError("log weights must be finite (full support)");
    return BinaryModel(Form(ExplicitTable{n, std::move(log_weights)}), n);
}

BinaryModel BinaryModel::quadratic(std::vector<std::vector<double>> weights,
                                   std::vector<double> bias) {
    const int n = static_cast<int>(weights.size());
    detail::require_site_count(n);
    QuadraticEnergy q;
    q.n = n;
    q.weights.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(weights[static_cast<std::size_t>(i)].size()) != n)
            throw InvalidInputError("weight matrix must be square");
        for (int j = 0; j < n; ++j) {
            const double w = weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            require_finite(w, "weight");
            q.weights[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)] = w;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (q.weight(i + 1, i + 1) != 0.0)
            throw InvalidInputError("weight matrix must have zero diagonal");
        for (int j = i + 1; j < n; ++j)
            if (q.weight(i + 1, j + 1) != q.weight(j + 1, i + 1))
                throw InvalidInputError("weight matrix must be symmetric");
    }
    if (bias.empty()) bias.assign(static_cast<std::size_t>(n), 0.0);
    if (static_cast<int>(bias.size()) != n)
        throw InvalidInputError("bias length must match the number of sites");
    for (double b : bias) require_finite(b, "bias");
    q.bias = std::move(bias);
    return BinaryModel(Form(std::move(q)), n);
}

double BinaryModel::energy(StateIndex x) const {
    detail::require_state(x, n_);
    if (const auto* lat = std::get_if<IsingLattice>(&form_)) {
        long aligned = 0;  // sum of s_a * s_b over neighbour pairs, each term +-1
        for (const auto& [a, b] : lat->neighbor_pairs)
            aligned += site_spin(x, a) * site_spin(x, b);
        return -lat->coupling * static_cast<double>(aligned);
    }
    if (const auto* tab = std::get_if<ExplicitTable>(&form_))
        return -tab->log_weights[x];
    const auto& q = std::get<QuadraticEnergy>(form_);
    double e = 0.0;
    for (int i = 1; i <= n_; ++i) {
        const double si = site_spin(x, i);
        for (int j = i + 1; j <= n_; ++j) e -= q.weight(i, j) * si * site_spin(x, j);
        e -= q.bias[static_cast<std::size_t>(i - 1)] * si;
    }
    return e;
}

double BinaryModel::log_prob_ratio(StateIndex x, StateIndex y) const {
    return energy(x) - energy(y);
}

double BinaryModel::flip_log_ratio(StateIndex x, int site) const {
    detail::require_state(x, n_);
    detail::require_site(site, n_);
    if (const auto* lat = std::get_if<IsingLattice>(&form_)) {
        long neighbor_sum = 0;
        for (int b : lat->adjacency[static_cast<std::size_t>(site - 1)])
            neighbor_sum += site_spin(x, b);
        // Delta E = 2 J s_i * sum of neighbour spins; log ratio is -Delta E.
        return -2.0 * lat->coupling * static_cast<double>(site_spin(x, site) * neighbor_sum);
    }
    if (const auto* tab = std::get_if<ExplicitTable>(&form_))
        return tab->log_weights[x ^ (StateIndex{1} << (site - 1))] - tab->log_weights[x];
    const auto& q = std::get<QuadraticEnergy>(form_);
    double field = q.bias[static_cast<std::size_t>(site - 1)];
    for (int j = 1; j <= n_; ++j)
        if (j != site) field += q.weight(site, j) * site_spin(x, j);
    return -2.0 * site_spin(x, site) * field;
}

std::vector<double> BinaryModel::exact_distribution() const {
    const std::uint32_t count = state_count(n_);
    std::vector<double> log_w(count);
    double max_lw = -std::numeric_limits<double>::infinity();
    for (std::uint32_t x = 0; x < count; ++x) {
        log_w[x] = log_weight(x);
        max_lw = std::max(max_lw, log_w[x]);
    }
    double total = 0.0;
    for (std::uint32_t x = 0; x < count; ++x) {
        log_w[x] = std::exp(log_w[x] - max_lw);
        total += log_w[x];
    }
    for (std::uint32_t x = 0; x < count; ++x) log_w[x] /= total;
    return log_w;
}

TieReport BinaryModel::check_tie_condition(double tol) const {
    if (tol < 0.0 || !std::isfinite(tol)) throw InvalidInputError("tolerance must be >= 0");
    TieReport report;
    report.tolerance = tol;
    const std::uint32_t count = state_count(n_);
    for (StateIndex x = 0; x < count; ++x)
        for (int i = 1; i <= n_; ++i)
            if (std::abs(flip_log_ratio(x, i)) <= tol)
                report.violations.push_back({x, i});
    report.tie_free = report.violations.empty();
    return report;
}

}  // namespace sweepmc
