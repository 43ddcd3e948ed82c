// Command-line driver: spectral-gap curves, ergodicity reports, proof-graph
// enumeration, locking counter-examples and seeded sampling, all emitting
// plot-ready CSV/JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "sweepmc/chain.hpp"
#include "sweepmc/ergodicity.hpp"
#include "sweepmc/json_io.hpp"
#include "sweepmc/proof_graph.hpp"
#include "sweepmc/transition_matrix.hpp"

using nlohmann::json;
using namespace sweepmc;

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceCap = 3;

std::string read_model_text(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return spec;
    std::ifstream in(spec);
    if (!in) throw InvalidInputError("cannot open model file '" + spec + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

SweepOrder make_order(const std::string& name, const BinaryModel& model) {
    if (name == "linear") return SweepOrder::linear(model.site_count());
    if (name == "chessboard") {
        const auto* lat = model.ising_lattice();
        if (!lat) throw InvalidInputError("chessboard order requires an ising model");
        return SweepOrder::chessboard(lat->rows, lat->cols);
    }
    if (name.rfind("custom:", 0) == 0) {
        std::vector<int> sites;
        std::stringstream ss(name.substr(7));
        std::string token;
        while (std::getline(ss, token, ',')) sites.push_back(std::stoi(token));
        return SweepOrder::custom(std::move(sites));
    }
    throw InvalidInputError("unknown order '" + name +
                            "' (expected linear, chessboard, or custom:<perm>)");
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw InvalidInputError("cannot open output file '" + path + "'");
    return file;
}

void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < count; i = next++) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
}

std::string format_double(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", v);
    return buffer;
}

struct CommonFlags {
    std::string model_spec;
    std::vector<std::string> rules;
    std::vector<std::string> orders;
    std::string out_path;
    std::string format = "csv";
    double tie_tol = kDefaultTieTolerance;
};

AcceptanceRule make_rule(const std::string& name, double tol) {
    const AcceptanceKind kind = acceptance_kind_from_string(name);
    AcceptanceRule rule{kind, tol};
    return rule;
}

// ---------------------------------------------------------------- spectral-gap

int cmd_spectral_gap(const CommonFlags& flags, double j_start, double j_stop, double j_step,
                     bool grid_given, const std::string& dump_prefix) {
    const std::string model_text = read_model_text(flags.model_spec);
    const BinaryModel base = model_from_json_text(model_text);

    std::vector<double> couplings;
    if (base.ising_lattice()) {
        if (j_step <= 0.0) throw InvalidInputError("--J-step must be positive");
        if (j_stop < j_start) throw InvalidInputError("--J-stop must be >= --J-start");
        const auto points =
            static_cast<std::size_t>(std::floor((j_stop - j_start) / j_step + 0.5)) + 1;
        for (std::size_t k = 0; k < points; ++k)
            couplings.push_back(j_start + static_cast<double>(k) * j_step);
    } else {
        if (grid_given)
            throw InvalidInputError("a coupling grid only applies to ising models");
        couplings.push_back(std::nan(""));  // single row at the model's own parameters
    }

    struct Row {
        double coupling = 0.0;
        std::string rule;
        std::string order;
        bool ok = false;
        std::string error;
        double gap = 0.0;
        double lambda2 = 0.0;
    };
    std::vector<Row> rows;
    for (const double coupling : couplings)
        for (const auto& rule : flags.rules)
            for (const auto& order : flags.orders) {
                Row row;
                row.coupling = coupling;
                row.rule = rule;
                row.order = order;
                rows.push_back(std::move(row));
            }

    parallel_for_index(rows.size(), [&](std::size_t i) {
        Row& row = rows[i];
        try {
            const BinaryModel model =
                std::isnan(row.coupling) ? model_from_json_text(model_text)
                                         : model_from_json_text(model_text, row.coupling);
            const SweepKernel kernel(model, make_rule(row.rule, flags.tie_tol),
                                     make_order(row.order, model));
            const TransitionMatrix T = sweep_matrix(kernel);
            const SpectralReport report = spectral_gap(T);
            row.gap = report.gap;
            row.lambda2 = report.lambda2_modulus;
            row.ok = true;
            if (!dump_prefix.empty()) {
                std::ostringstream name;
                name << dump_prefix << "_J" << format_double(row.coupling) << "_" << row.rule
                     << "_" << row.order << ".swmx";
                std::ofstream file(name.str(), std::ios::binary);
                dump_matrix(T, file);
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    });

    std::ofstream file;
    std::ostream& out = open_output(flags.out_path, file);
    std::size_t succeeded = 0;
    if (flags.format == "json") {
        json array = json::array();
        for (const Row& row : rows) {
            if (!row.ok) continue;
            ++succeeded;
            json item;
            if (!std::isnan(row.coupling)) item["J"] = row.coupling;
            item["rule"] = row.rule;
            item["order"] = row.order;
            item["gap"] = row.gap;
            item["lambda2_modulus"] = row.lambda2;
            array.push_back(item);
        }
        out << array.dump() << "\n";
    } else if (flags.format == "csv") {
        out << "J,rule,order,gap,lambda2_modulus\n";
        for (const Row& row : rows) {
            if (!row.ok) continue;
            ++succeeded;
            out << (std::isnan(row.coupling) ? "" : format_double(row.coupling)) << ","
                << row.rule << "," << row.order << "," << format_double(row.gap) << ","
                << format_double(row.lambda2) << "\n";
        }
    } else {
        throw InvalidInputError("spectral-gap supports --format csv or json");
    }
    for (const Row& row : rows)
        if (!row.ok)
            std::cerr << "row J=" << (std::isnan(row.coupling) ? "-" : format_double(row.coupling))
                      << " rule=" << row.rule << " order=" << row.order
                      << " failed: " << row.error << "\n";
    return succeeded == 0 ? kExitResourceCap : 0;
}

// ---------------------------------------------------------------- check-ergodic

int cmd_check_ergodic(const CommonFlags& flags) {
    const std::string model_text = read_model_text(flags.model_spec);
    const BinaryModel model = model_from_json_text(model_text);
    const TieReport ties = model.check_tie_condition(flags.tie_tol);

    json results = json::array();
    for (const auto& rule_name : flags.rules)
        for (const auto& order_name : flags.orders) {
            const SweepKernel kernel(model, make_rule(rule_name, flags.tie_tol),
                                     make_order(order_name, model));
            const ErgodicityReport report = check_ergodic(kernel);
            json item = json::parse(ergodicity_report_to_json_text(report, &ties));
            item["rule"] = rule_name;
            item["order"] = order_name;
            results.push_back(item);
        }

    std::ofstream file;
    std::ostream& out = open_output(flags.out_path, file);
    out << (results.size() == 1 ? results.front().dump() : results.dump()) << "\n";
    return 0;
}

// ---------------------------------------------------------------- proof-graph

int cmd_proof_graph(int n, const std::string& subsets_spec, const std::string& out_path) {
    if (n < 1 || n > 6) throw InvalidInputError("proof-graph supports n in [1, 6]");
    const std::uint64_t states = std::uint64_t{1} << n;

    std::vector<std::uint64_t> masks;
    if (subsets_spec == "exhaustive") {
        if (n > 4)
            throw ResourceLimitError("exhaustive enumeration is limited to n <= 4");
        const std::uint64_t full = (states >= 64) ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << states) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) masks.push_back(mask);
    } else if (subsets_spec.rfind("random:", 0) == 0) {
        std::stringstream ss(subsets_spec.substr(7));
        std::string count_token, seed_token;
        if (!std::getline(ss, count_token, ':') || !std::getline(ss, seed_token, ':'))
            throw InvalidInputError("expected --subsets random:<count>:<seed>");
        const std::uint64_t count = std::stoull(count_token);
        std::mt19937_64 rng(std::stoull(seed_token));
        const std::uint64_t full =
            (states >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << states) - 1;
        while (masks.size() < count) {
            const std::uint64_t mask = rng() & full;
            if (mask != 0 && mask != full) masks.push_back(mask);
        }
    } else if (subsets_spec.rfind("mask:", 0) == 0) {
        masks.push_back(std::stoull(subsets_spec.substr(5)));
    } else {
        throw InvalidInputError(
            "expected --subsets exhaustive, random:<count>:<seed>, or mask:<int>");
    }

    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    std::uint64_t balanced = 0, cyclic = 0;
    for (const std::uint64_t mask : masks) {
        std::vector<StateIndex> subset;
        for (std::uint64_t x = 0; x < states; ++x)
            if (mask & (std::uint64_t{1} << x)) subset.push_back(static_cast<StateIndex>(x));
        if (subset.empty() || subset.size() == states)
            throw InvalidInputError("subsets must be proper and nonempty");

        const ProofGraph graph = edge_set(subset, n);
        const bool is_balanced = degree_balance(graph);
        const auto cycle = find_cycle(graph);
        balanced += is_balanced ? 1 : 0;
        cyclic += cycle.has_value() ? 1 : 0;

        json line;
        line["subset_mask"] = mask;
        line["balanced"] = is_balanced;
        line["duplicate_edges"] = graph.duplicate_edge_count();
        line["cycle"] = cycle ? json(*cycle) : json(nullptr);
        out << line.dump() << "\n";
    }
    json summary;
    summary["subsets"] = masks.size();
    summary["balanced"] = balanced;
    summary["cyclic"] = cyclic;
    out << summary.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------- counterexample

StateIndex striped_start(int rows, int cols) {
    std::vector<int> bits(static_cast<std::size_t>(rows * cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            bits[static_cast<std::size_t>(r * cols + c)] = (r % 2 == 0) ? 1 : 0;
    return bits_to_state(bits);
}

StateIndex triangular_start(int rows, int cols) {
    std::vector<int> bits(static_cast<std::size_t>(rows * cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            bits[static_cast<std::size_t>(r * cols + c)] = (c >= r) ? 1 : 0;
    return bits_to_state(bits);
}

int cmd_counterexample(const std::string& name, int rows, int cols, double coupling,
                       std::uint64_t sweeps, std::uint64_t seed, const std::string& out_path) {
    if (rows * cols > kMaxSites)
        throw ResourceLimitError("lattice exceeds the supported site count");
    StateIndex start = 0;
    SweepOrder order = SweepOrder::linear(1);
    if (name == "chessboard-stripes") {
        if (rows % 2 != 0 || cols % 2 != 0)
            throw InvalidInputError("chessboard-stripes needs even lattice dimensions");
        start = striped_start(rows, cols);
        order = SweepOrder::chessboard(rows, cols);
    } else if (name == "linear-triangle") {
        if (rows != cols) throw InvalidInputError("linear-triangle needs a square lattice");
        start = triangular_start(rows, cols);
        order = SweepOrder::linear(rows * cols);
    } else {
        throw InvalidInputError("unknown counter-example '" + name +
                                "' (expected chessboard-stripes or linear-triangle)");
    }

    const BinaryModel model = BinaryModel::ising(rows, cols, true, coupling);
    const SweepKernel kernel(model, AcceptanceRule::standard(), order);
    const int n = rows * cols;

    ChainOptions options;
    options.sweeps = sweeps;
    options.seed = seed;
    options.record_substeps = true;
    const ChainResult result = run_chain(kernel, start, options);

    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << "name: " << name << "\n";
    out << "lattice: " << rows << "x" << cols << " periodic, J=" << format_double(coupling)
        << "\n";
    out << "rule: standard, order: " << order.name() << "\n";
    out << "phase 0 (start):\n" << render_lattice(start, rows, cols);
    const bool half_phases = name == "chessboard-stripes";
    int phase = 1;
    for (std::uint64_t s = 0; s < std::min<std::uint64_t>(sweeps, 2); ++s) {
        if (half_phases) {
            const StateIndex half =
                result.trajectory.substeps[s * static_cast<std::uint64_t>(n) +
                                           static_cast<std::uint64_t>(n / 2) - 1];
            out << "phase " << phase++ << " (sweep " << s + 1 << ", first color updated):\n"
                << render_lattice(half, rows, cols);
        }
        out << "phase " << phase++ << " (sweep " << s + 1 << " complete):\n"
            << render_lattice(result.trajectory.after_sweep[s], rows, cols);
    }

    bool periodic = sweeps >= 4;
    for (std::uint64_t s = 0; s + 2 < sweeps && periodic; ++s)
        periodic = result.trajectory.after_sweep[s] == result.trajectory.after_sweep[s + 2];
    if (periodic && result.trajectory.after_sweep[0] == result.trajectory.after_sweep[1])
        periodic = false;  // a fixed point is not the locking cycle
    out << "periodic: " << (periodic ? "yes" : "no") << "\n";
    return 0;
}

// ---------------------------------------------------------------- sample

int cmd_sample(const CommonFlags& flags, std::uint64_t sweeps, std::uint64_t burn_in,
               std::uint64_t seed, std::int64_t start, const std::string& trajectory_out) {
    const BinaryModel model = model_from_json_text(read_model_text(flags.model_spec));
    const SweepKernel kernel(model, make_rule(flags.rules.front(), flags.tie_tol),
                             make_order(flags.orders.front(), model));

    StateIndex start_state = 0;
    if (start >= 0) {
        start_state = static_cast<StateIndex>(start);
        detail::require_state(start_state, model.site_count());
    }

    ChainOptions options;
    options.sweeps = sweeps;
    options.burn_in = burn_in;
    options.seed = seed;
    const ChainResult result = run_chain(kernel, start_state, options);

    if (!trajectory_out.empty()) {
        std::ofstream tfile(trajectory_out);
        if (!tfile) throw InvalidInputError("cannot open '" + trajectory_out + "'");
        tfile << json(result.trajectory.after_sweep).dump() << "\n";
    }

    std::ofstream file;
    std::ostream& out = open_output(flags.out_path, file);
    json summary = json::parse(empirical_summary_to_json_text(result.summary));
    summary["rule"] = flags.rules.front();
    summary["order"] = flags.orders.front();
    summary["seed"] = seed;
    summary["start"] = start_state;
    out << summary.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis and seeded sampling of fixed-order single-site MCMC kernels "
                 "on binary distributions"};
    app.require_subcommand(1);

    CommonFlags flags;
    double j_start = 0.0, j_stop = 2.0, j_step = 0.05;
    std::string dump_prefix;
    int pg_n = 3;
    std::string subsets_spec = "exhaustive";
    std::string ce_name;
    int ce_rows = 4, ce_cols = 4;
    double ce_coupling = 1.0;
    std::uint64_t sweeps = 10000, burn_in = 0, seed = 0, ce_sweeps = 8;
    std::int64_t start = -1;
    std::string trajectory_out;

    auto add_common = [&](CLI::App* cmd, bool multi_rule) {
        cmd->add_option("--model", flags.model_spec, "model JSON (inline or file path)")
            ->required();
        auto* rule_opt = cmd->add_option("--rule", flags.rules, "standard, modified, gibbs");
        auto* order_opt =
            cmd->add_option("--order", flags.orders, "linear, chessboard, custom:<perm>");
        if (!multi_rule) {
            rule_opt->expected(1);
            order_opt->expected(1);
        }
        cmd->add_option("--out", flags.out_path, "output path (default stdout)");
        cmd->add_option("--tol", flags.tie_tol, "tie tolerance on |log p ratio|");
    };

    auto* sg = app.add_subcommand("spectral-gap", "spectral gap of sweep matrices over a J grid");
    add_common(sg, true);
    auto* jstart_opt = sg->add_option("--J-start", j_start, "coupling grid start");
    sg->add_option("--J-stop", j_stop, "coupling grid stop");
    sg->add_option("--J-step", j_step, "coupling grid step");
    sg->add_option("--format", flags.format, "csv or json");
    sg->add_option("--dump-matrix", dump_prefix, "write binary matrix dumps with this prefix");

    auto* ce_cmd = app.add_subcommand("check-ergodic", "irreducibility and period analysis");
    add_common(ce_cmd, true);

    auto* pg = app.add_subcommand("proof-graph", "subset edge-set balance and cycle search");
    pg->add_option("--n", pg_n, "number of sites (<= 6)")->required();
    pg->add_option("--subsets", subsets_spec, "exhaustive, random:<count>:<seed>, mask:<int>");
    pg->add_option("--out", flags.out_path, "output path (default stdout)");

    auto* cx = app.add_subcommand("counterexample", "locking trajectories of the standard rule");
    cx->add_option("--name", ce_name, "chessboard-stripes or linear-triangle")->required();
    cx->add_option("--rows", ce_rows, "lattice rows");
    cx->add_option("--cols", ce_cols, "lattice cols");
    cx->add_option("--J", ce_coupling, "coupling strength");
    cx->add_option("--sweeps", ce_sweeps, "sweeps to simulate");
    cx->add_option("--seed", seed, "rng seed");
    cx->add_option("--out", flags.out_path, "output path (default stdout)");

    auto* sm = app.add_subcommand("sample", "seeded chain with empirical summary");
    add_common(sm, false);
    sm->add_option("--sweeps", sweeps, "number of sweeps")->required();
    sm->add_option("--burn-in", burn_in, "sweeps discarded before counting");
    sm->add_option("--seed", seed, "rng seed");
    sm->add_option("--start", start, "start state index (default 0)");
    sm->add_option("--trajectory-out", trajectory_out, "write the sweep trajectory JSON here");

    try {
        app.parse(argc, argv);

        if (flags.rules.empty()) flags.rules = {"standard", "modified", "gibbs"};
        if (flags.orders.empty()) flags.orders = {"linear"};

        if (sg->parsed())
            return cmd_spectral_gap(flags, j_start, j_stop, j_step, jstart_opt->count() > 0,
                                    dump_prefix);
        if (ce_cmd->parsed()) return cmd_check_ergodic(flags);
        if (pg->parsed()) return cmd_proof_graph(pg_n, subsets_spec, flags.out_path);
        if (cx->parsed())
            return cmd_counterexample(ce_name, ce_rows, ce_cols, ce_coupling, ce_sweeps, seed,
                                      flags.out_path);
        if (sm->parsed()) return cmd_sample(flags, sweeps, burn_in, seed, start, trajectory_out);
        return kExitInvalidInput;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidInput;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
