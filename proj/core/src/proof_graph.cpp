#include "sweepmc/proof_graph.hpp"

#include <algorithm>
#include <map>

namespace sweepmc {

namespace {

std::vector<StateIndex> normalize_subset(const std::vector<StateIndex>& subset, int n) {
    std::vector<StateIndex> s = subset;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (const StateIndex x : s) detail::require_state(x, n);
    return s;
}

inline bool contains(const std::vector<StateIndex>& sorted, StateIndex x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

/// The two edges contributed by generator (x, i): the prefix edge and the
/// suffix edge.
inline std::pair<ProofEdge, ProofEdge> generator_edges(StateIndex x, int i, int n) {
    const ProofEdge prefix{flip_prefix(x, i - 1, n), flip_prefix(x, i, n)};
    const ProofEdge suffix{flip_suffix(x, i, n), flip_suffix(x, i + 1, n)};
    return {prefix, suffix};
}

std::vector<ProofEdge> generate_edges(const std::vector<StateIndex>& sorted_subset, int n) {
    std::vector<ProofEdge> edges;
    for (const StateIndex x : sorted_subset) {
        for (int i = 1; i <= n; ++i) {
            const StateIndex neighbor = x ^ (StateIndex{1} << (i - 1));
            if (contains(sorted_subset, neighbor)) continue;
            const auto [prefix, suffix] = generator_edges(x, i, n);
            edges.push_back(prefix);
            edges.push_back(suffix);
        }
    }
    return edges;
}

using EdgeMultiset = std::map<ProofEdge, int>;

EdgeMultiset to_multiset(const std::vector<ProofEdge>& edges) {
    EdgeMultiset ms;
    for (const ProofEdge& e : edges) ++ms[e];
    return ms;
}

}  // namespace

ProofGraph::ProofGraph(int site_count, std::vector<StateIndex> subset,
                       std::vector<ProofEdge> generated_edges)
    : n_(site_count), subset_(std::move(subset)), generated_count_(generated_edges.size()) {
    detail::require_site_count(site_count);
    std::sort(generated_edges.begin(), generated_edges.end());
    std::map<StateIndex, std::pair<int, int>> degrees;
    for (std::size_t k = 0; k < generated_edges.size(); ++k) {
        const ProofEdge& e = generated_edges[k];
        if (k == 0 || generated_edges[k - 1] != e) {
            edges_.push_back(e);
            multiplicities_.push_back(1);
        } else {
            ++multiplicities_.back();
        }
        ++degrees[e.first].first;
        ++degrees[e.second].second;
    }
    degrees_.assign(degrees.begin(), degrees.end());
}

int ProofGraph::duplicate_edge_count() const {
    int dup = 0;
    for (const int m : multiplicities_)
        if (m > 1) ++dup;
    return dup;
}

int ProofGraph::out_degree(StateIndex v) const {
    const auto it = std::lower_bound(degrees_.begin(), degrees_.end(), v,
                                     [](const auto& entry, StateIndex key) { return entry.first < key; });
    return it != degrees_.end() && it->first == v ? it->second.first : 0;
}

int ProofGraph::in_degree(StateIndex v) const {
    const auto it = std::lower_bound(degrees_.begin(), degrees_.end(), v,
                                     [](const auto& entry, StateIndex key) { return entry.first < key; });
    return it != degrees_.end() && it->first == v ? it->second.second : 0;
}

std::vector<StateIndex> ProofGraph::touched_vertices() const {
    std::vector<StateIndex> vertices;
    vertices.reserve(degrees_.size());
    for (const auto& [v, deg] : degrees_) vertices.push_back(v);
    return vertices;
}

ProofGraph edge_set(const std::vector<StateIndex>& subset, int site_count) {
    detail::require_site_count(site_count);
    std::vector<StateIndex> sorted = normalize_subset(subset, site_count);
    std::vector<ProofEdge> edges = generate_edges(sorted, site_count);
    return ProofGraph(site_count, std::move(sorted), std::move(edges));
}

bool degree_balance(const ProofGraph& graph) {
    for (const StateIndex v : graph.touched_vertices())
        if (graph.out_degree(v) != graph.in_degree(v)) return false;
    return true;
}

std::optional<std::vector<StateIndex>> find_cycle(const ProofGraph& graph) {
    const auto& edges = graph.edges();
    if (edges.empty()) return std::nullopt;

    // Adjacency over the collapsed edge set; edges() is sorted, so the
    // successor lists come out ascending and DFS order is deterministic.
    std::map<StateIndex, std::vector<StateIndex>> adjacency;
    for (const ProofEdge& e : edges) adjacency[e.first].push_back(e.second);

    enum : char { White, Gray, Black };
    std::map<StateIndex, char> color;
    std::vector<StateIndex> path;

    struct Frame {
        StateIndex v;
        std::size_t next;
    };
    std::vector<Frame> stack;

    for (const auto& [root, _] : adjacency) {
        if (color.count(root)) continue;
        stack.push_back({root, 0});
        color[root] = Gray;
        path.push_back(root);
        while (!stack.empty()) {
            Frame& frame = stack.back();
            const auto it = adjacency.find(frame.v);
            const std::vector<StateIndex>* succ = it == adjacency.end() ? nullptr : &it->second;
            if (succ && frame.next < succ->size()) {
                const StateIndex w = (*succ)[frame.next++];
                const auto cw = color.find(w);
                if (cw == color.end()) {
                    color[w] = Gray;
                    path.push_back(w);
                    stack.push_back({w, 0});
                } else if (cw->second == Gray) {
                    const auto begin = std::find(path.begin(), path.end(), w);
                    return std::vector<StateIndex>(begin, path.end());
                }
            } else {
                color[frame.v] = Black;
                path.pop_back();
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

InductionReport verify_induction_step(const std::vector<StateIndex>& subset, StateIndex extra,
                                      int site_count) {
    const int n = site_count;
    detail::require_site_count(n);
    detail::require_state(extra, n);
    const std::vector<StateIndex> base = normalize_subset(subset, n);
    if (contains(base, extra))
        throw InvalidInputError("the added state must lie outside the subset");

    InductionReport report;
    for (int i = 1; i <= n; ++i)
        if (contains(base, extra ^ (StateIndex{1} << (i - 1)))) report.overlap_sites.push_back(i);

    std::vector<StateIndex> grown = base;
    grown.push_back(extra);
    std::sort(grown.begin(), grown.end());

    const EdgeMultiset direct = to_multiset(generate_edges(grown, n));
    const EdgeMultiset base_edges = to_multiset(generate_edges(base, n));
    const EdgeMultiset extra_edges = to_multiset(generate_edges({extra}, n));

    EdgeMultiset constructed = base_edges;
    for (const auto& [e, count] : extra_edges) constructed[e] += count;

    if (report.overlap_sites.empty()) {
        const StateIndex complement = complement_state(extra, n);
        report.branch = contains(base, complement) ? InductionCase::NoOverlapComplementInSubset
                                                   : InductionCase::NoOverlapDisjoint;
        report.union_disjoint = true;
        for (const auto& [e, count] : extra_edges)
            if (base_edges.count(e)) report.union_disjoint = false;
        report.removed_edges_pair_up = true;  // nothing removed
    } else {
        report.branch = InductionCase::Overlap;
        report.removed_edges_pair_up = true;
        for (const int i : report.overlap_sites) {
            // One generator copy disappears on each side: (f_i(x'), i)
            // stops generating in the grown set because its neighbour x'
            // joined, and (x', i) never generates because f_i(x') is
            // inside.
            const StateIndex inner = extra ^ (StateIndex{1} << (i - 1));
            const auto [base_prefix, base_suffix] = generator_edges(inner, i, n);
            const auto [extra_prefix, extra_suffix] = generator_edges(extra, i, n);
            for (const ProofEdge& e : {base_prefix, base_suffix, extra_prefix, extra_suffix}) {
                auto it = constructed.find(e);
                if (it == constructed.end() || it->second == 0) {
                    report.agrees = false;
                    return report;
                }
                if (--it->second == 0) constructed.erase(it);
            }
            // The two edges dropped from E(S) are exactly the reverses of
            // the two dropped from E({x'}).
            const ProofEdge rev_prefix{extra_prefix.second, extra_prefix.first};
            const ProofEdge rev_suffix{extra_suffix.second, extra_suffix.first};
            const bool pair_ok = (rev_prefix == base_prefix || rev_prefix == base_suffix) &&
                                 (rev_suffix == base_prefix || rev_suffix == base_suffix);
            if (!pair_ok) report.removed_edges_pair_up = false;
        }
    }

    report.agrees = constructed == direct;

    std::vector<ProofEdge> direct_set;
    for (const auto& [e, count] : direct) {
        direct_set.push_back(e);
        if (count > 1) ++report.duplicate_generators;
    }
    std::vector<ProofEdge> base_set;
    for (const auto& [e, count] : base_edges) base_set.push_back(e);
    report.set_equal_to_base = direct_set == base_set;
    return report;
}

}  // namespace sweepmc
