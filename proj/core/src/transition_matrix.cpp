#include "sweepmc/transition_matrix.hpp"

#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>

namespace sweepmc {

namespace {

constexpr char kMagic[4] = {'S', 'W', 'M', 'X'};
constexpr std::uint32_t kFormatVersion = 1;
constexpr const char* kConventionTag = "row-stochastic;site1=lsb;float64;row-major";

void require_dense_cap(int n) {
    detail::require_site_count(n);
    if (n > kMaxDenseSites)
        throw ResourceLimitError("dense matrices are limited to " +
                                 std::to_string(kMaxDenseSites) + " sites, got " +
                                 std::to_string(n));
}

/// Flip probability from every state at one site, under one rule.
std::vector<double> flip_probs(const BinaryModel& model, const AcceptanceRule& rule, int site) {
    const std::uint32_t count = state_count(model.site_count());
    std::vector<double> p(count);
    for (StateIndex x = 0; x < count; ++x)
        p[x] = accept_prob(rule, model.flip_log_ratio(x, site));
    return p;
}

}  // namespace

TransitionMatrix::TransitionMatrix(int site_count, std::vector<double> row_major)
    : n_(site_count) {
    require_dense_cap(site_count);
    dim_ = std::size_t{1} << site_count;
    if (row_major.size() != dim_ * dim_)
        throw InvalidInputError("matrix payload size does not match 2^n x 2^n");
    entries_ = std::move(row_major);
}

double TransitionMatrix::row_sum(StateIndex from) const {
    detail::require_state(from, n_);
    double s = 0.0;
    const double* row = entries_.data() + static_cast<std::size_t>(from) * dim_;
    for (std::size_t y = 0; y < dim_; ++y) s += row[y];
    return s;
}

double TransitionMatrix::max_row_sum_error() const {
    double worst = 0.0;
    for (std::size_t x = 0; x < dim_; ++x)
        worst = std::max(worst, std::abs(row_sum(static_cast<StateIndex>(x)) - 1.0));
    return worst;
}

TransitionMatrix site_matrix(const BinaryModel& model, const AcceptanceRule& rule, int site) {
    const int n = model.site_count();
    require_dense_cap(n);
    detail::require_site(site, n);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> m(dim * dim, 0.0);
    for (StateIndex x = 0; x < dim; ++x) {
        const StateIndex y = x ^ (StateIndex{1} << (site - 1));
        const double p = accept_prob(rule, model.flip_log_ratio(x, site));
        m[static_cast<std::size_t>(x) * dim + y] = p;
        m[static_cast<std::size_t>(x) * dim + x] = 1.0 - p;
    }
    return TransitionMatrix(n, std::move(m));
}

TransitionMatrix sweep_matrix(const SweepKernel& kernel) {
    const BinaryModel& model = kernel.model();
    const int n = model.site_count();
    require_dense_cap(n);
    const std::size_t dim = std::size_t{1} << n;
    const auto sites = kernel.order().sites();

    // Start from the first site operator, then fold in the remaining ones:
    // M <- M * T_i exploits that column y of T_i has nonzeros only at rows
    // y and f_i(y), so each row of M is updated pairwise in place.
    std::vector<double> m = site_matrix(model, kernel.rule(), sites[0]).entries();
    for (std::size_t k = 1; k < sites.size(); ++k) {
        const int site = sites[k];
        const StateIndex bit = StateIndex{1} << (site - 1);
        const std::vector<double> flip = flip_probs(model, kernel.rule(), site);
        for (std::size_t r = 0; r < dim; ++r) {
            double* row = m.data() + r * dim;
            for (StateIndex y = 0; y < dim; ++y) {
                if (y & bit) continue;  // handle each {y, f_i(y)} pair once
                const StateIndex y2 = y | bit;
                const double a = row[y];
                const double b = row[y2];
                row[y] = a * (1.0 - flip[y]) + b * flip[y2];
                row[y2] = a * flip[y] + b * (1.0 - flip[y2]);
            }
        }
    }
    return TransitionMatrix(n, std::move(m));
}

double stationary_residual(const TransitionMatrix& T, const BinaryModel& model) {
    if (model.site_count() != T.site_count())
        throw InvalidInputError("matrix and model site counts differ");
    const std::vector<double> p = model.exact_distribution();
    const std::size_t dim = T.dim();
    std::vector<double> image(dim, 0.0);
    for (std::size_t x = 0; x < dim; ++x) {
        const double px = p[x];
        const double* row = T.entries().data() + x * dim;
        for (std::size_t y = 0; y < dim; ++y) image[y] += px * row[y];
    }
    double residual = 0.0;
    for (std::size_t y = 0; y < dim; ++y) residual = std::max(residual, std::abs(image[y] - p[y]));
    return residual;
}

void dump_matrix(const TransitionMatrix& T, std::ostream& out) {
    out.write(kMagic, 4);
    auto write_u32 = [&](std::uint32_t v) {
        out.write(reinterpret_cast<const char*>(&v), sizeof v);
    };
    write_u32(kFormatVersion);
    write_u32(static_cast<std::uint32_t>(T.site_count()));
    const std::uint32_t tag_len = static_cast<std::uint32_t>(std::strlen(kConventionTag));
    write_u32(tag_len);
    out.write(kConventionTag, tag_len);
    out.write(reinterpret_cast<const char*>(T.entries().data()),
              static_cast<std::streamsize>(T.entries().size() * sizeof(double)));
    if (!out) throw InvalidInputError("failed to write matrix dump");
}

TransitionMatrix load_matrix(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw InvalidInputError("not a matrix dump (bad magic)");
    auto read_u32 = [&]() {
        std::uint32_t v = 0;
        in.read(reinterpret_cast<char*>(&v), sizeof v);
        return v;
    };
    const std::uint32_t version = read_u32();
    if (version != kFormatVersion) throw InvalidInputError("unsupported matrix dump version");
    const std::uint32_t n = read_u32();
    const std::uint32_t tag_len = read_u32();
    if (tag_len > 4096) throw InvalidInputError("implausible tag length in matrix dump");
    std::string tag(tag_len, '\0');
    in.read(tag.data(), tag_len);
    if (n < 1 || n > static_cast<std::uint32_t>(kMaxDenseSites))
        throw InvalidInputError("matrix dump has out-of-range site count");
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> entries(dim * dim);
    in.read(reinterpret_cast<char*>(entries.data()),
            static_cast<std::streamsize>(entries.size() * sizeof(double)));
    if (!in) throw InvalidInputError("truncated matrix dump");
    return TransitionMatrix(static_cast<int>(n), std::move(entries));
}

}  // namespace sweepmc
