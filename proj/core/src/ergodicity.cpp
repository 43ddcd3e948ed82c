#include "sweepmc/ergodicity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace sweepmc {

SupportGraph support_graph(const TransitionMatrix& T, double threshold) {
    if (threshold < 0.0 || !std::isfinite(threshold))
        throw InvalidInputError("support threshold must be >= 0");
    SupportGraph g;
    g.n = T.site_count();
    g.vertex_count = T.dim();
    g.offsets.assign(g.vertex_count + 1, 0);
    for (std::size_t x = 0; x < g.vertex_count; ++x) {
        const double* row = T.entries().data() + x * g.vertex_count;
        for (std::size_t y = 0; y < g.vertex_count; ++y)
            if (row[y] > threshold) g.targets.push_back(static_cast<StateIndex>(y));
        g.offsets[x + 1] = g.targets.size();
    }
    return g;
}

SccResult strongly_connected_components(const SupportGraph& graph) {
    const std::size_t count = graph.vertex_count;
    SccResult result;
    result.component.assign(count, -1);

    std::vector<int> index(count, -1);
    std::vector<int> lowlink(count, 0);
    std::vector<char> on_stack(count, 0);
    std::vector<StateIndex> stack;
    stack.reserve(count);

    struct Frame {
        StateIndex v;
        std::size_t next_edge;
    };
    std::vector<Frame> call;
    int next_index = 0;

    for (std::size_t root = 0; root < count; ++root) {
        if (index[root] != -1) continue;
        call.push_back({static_cast<StateIndex>(root), graph.offsets[root]});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(static_cast<StateIndex>(root));
        on_stack[root] = 1;

        while (!call.empty()) {
            Frame& frame = call.back();
            const StateIndex v = frame.v;
            if (frame.next_edge < graph.offsets[v + 1]) {
                const StateIndex w = graph.targets[frame.next_edge++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, graph.offsets[w]});
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            } else {
                call.pop_back();
                if (!call.empty())
                    lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
                if (lowlink[v] == index[v]) {
                    auto& scc = result.members.emplace_back();
                    while (true) {
                        const StateIndex w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        result.component[w] = result.count;
                        scc.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(scc.begin(), scc.end());
                    ++result.count;
                }
            }
        }
    }
    return result;
}

namespace {

/// Components of the condensation with no outgoing edge.
std::vector<int> sink_components(const SupportGraph& graph, const SccResult& scc) {
    std::vector<char> has_out(static_cast<std::size_t>(scc.count), 0);
    for (std::size_t v = 0; v < graph.vertex_count; ++v) {
        const int cv = scc.component[v];
        for (const StateIndex w : graph.successors(static_cast<StateIndex>(v)))
            if (scc.component[w] != cv) has_out[static_cast<std::size_t>(cv)] = 1;
    }
    std::vector<int> sinks;
    for (int c = 0; c < scc.count; ++c)
        if (!has_out[static_cast<std::size_t>(c)]) sinks.push_back(c);
    return sinks;
}

/// gcd of (depth(u) + 1 - depth(v)) over edges inside the component of the
/// reference vertex; 1 means aperiodic.
int component_period(const SupportGraph& graph, const SccResult& scc, StateIndex reference) {
    const int comp = scc.component[reference];
    std::vector<long> depth(graph.vertex_count, -1);
    std::queue<StateIndex> frontier;
    depth[reference] = 0;
    frontier.push(reference);
    long period = 0;
    while (!frontier.empty()) {
        const StateIndex u = frontier.front();
        frontier.pop();
        for (const StateIndex w : graph.successors(u)) {
            if (scc.component[w] != comp) continue;
            if (depth[w] == -1) {
                depth[w] = depth[u] + 1;
                frontier.push(w);
            }
            period = std::gcd(period, depth[u] + 1 - depth[w]);
        }
    }
    return static_cast<int>(period == 0 ? 1 : std::abs(period));
}

StateIndex max_probability_state(const BinaryModel& model) {
    const std::uint32_t count = state_count(model.site_count());
    StateIndex best = 0;
    double best_lw = model.log_weight(0);
    for (StateIndex x = 1; x < count; ++x) {
        const double lw = model.log_weight(x);
        if (lw > best_lw) {
            best_lw = lw;
            best = x;
        }
    }
    return best;
}

std::optional<std::vector<StateIndex>> closed_set_from_scc(const TransitionMatrix& T,
                                                           const SupportGraph& graph,
                                                           const SccResult& scc) {
    if (scc.count == 1) return std::nullopt;
    const std::vector<int> sinks = sink_components(graph, scc);
    // Smallest sink component, ties broken by lowest member state.
    const int chosen = *std::min_element(sinks.begin(), sinks.end(), [&](int a, int b) {
        const auto& ma = scc.members[static_cast<std::size_t>(a)];
        const auto& mb = scc.members[static_cast<std::size_t>(b)];
        if (ma.size() != mb.size()) return ma.size() < mb.size();
        return ma.front() < mb.front();
    });
    std::vector<StateIndex> witness = scc.members[static_cast<std::size_t>(chosen)];

    // The probability mass of every member must stay inside the set.
    std::vector<char> inside(T.dim(), 0);
    for (const StateIndex x : witness) inside[x] = 1;
    for (const StateIndex x : witness) {
        double mass = 0.0;
        const double* row = T.entries().data() + static_cast<std::size_t>(x) * T.dim();
        for (std::size_t y = 0; y < T.dim(); ++y)
            if (inside[y]) mass += row[y];
        if (std::abs(mass - 1.0) > 1e-12)
            throw NumericalError(
                "sink component leaks probability mass; support threshold too large");
    }
    return witness;
}

}  // namespace

std::optional<std::vector<StateIndex>> find_closed_set(const TransitionMatrix& T,
                                                       double threshold) {
    const SupportGraph graph = support_graph(T, threshold);
    const SccResult scc = strongly_connected_components(graph);
    return closed_set_from_scc(T, graph, scc);
}

PeriodInfo is_aperiodic(const TransitionMatrix& T, const BinaryModel& model, double threshold) {
    const SupportGraph graph = support_graph(T, threshold);
    const SccResult scc = strongly_connected_components(graph);
    PeriodInfo info;
    info.reference_state = max_probability_state(model);
    info.period = component_period(graph, scc, info.reference_state);
    info.aperiodic = info.period == 1;
    info.reference_self_loop = T(info.reference_state, info.reference_state) > threshold;
    return info;
}

ErgodicityReport analyze_ergodicity(const TransitionMatrix& T, const BinaryModel& model,
                                    double threshold) {
    if (T.site_count() != model.site_count())
        throw InvalidInputError("matrix and model site counts differ");
    const SupportGraph graph = support_graph(T, threshold);
    const SccResult scc = strongly_connected_components(graph);

    ErgodicityReport report;
    report.scc_count = scc.count;
    report.irreducible = scc.count == 1;
    report.reference_state = max_probability_state(model);
    report.period = component_period(graph, scc, report.reference_state);
    report.aperiodic = report.period == 1;
    report.ergodic = report.irreducible && report.aperiodic;
    report.reference_self_loop =
        T(report.reference_state, report.reference_state) > threshold;
    if (!report.irreducible) report.closed_set_witness = closed_set_from_scc(T, graph, scc);
    return report;
}

ErgodicityReport check_ergodic(const SweepKernel& kernel, double threshold) {
    const TransitionMatrix T = sweep_matrix(kernel);
    return analyze_ergodicity(T, kernel.model(), threshold);
}

}  // namespace sweepmc
