#include <doctest.h>

#include <algorithm>
#include <random>

#include "sweepmc/ergodicity.hpp"
#include "sweepmc/proof_graph.hpp"
#include "test_util.hpp"

using namespace sweepmc;

namespace {

std::vector<StateIndex> mask_to_subset(std::uint32_t mask) {
    std::vector<StateIndex> subset;
    for (StateIndex x = 0; x < 32; ++x)
        if (mask & (1u << x)) subset.push_back(x);
    return subset;
}

std::vector<ProofEdge> sorted_edges(std::vector<ProofEdge> edges) {
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

TEST_CASE("singleton edge sets form one prefix/suffix cycle") {
    // S = {000} at n=3: prefix chain 000->100->110->111 and suffix chain
    // 111->011->001->000 (site-1-first strings).
    const auto graph = edge_set({0}, 3);
    const std::vector<ProofEdge> expected = sorted_edges({
        {0, 1}, {1, 3}, {3, 7},  // prefix edges
        {7, 6}, {6, 4}, {4, 0},  // suffix edges
    });
    CHECK(graph.edges() == expected);
    CHECK(graph.duplicate_edge_count() == 0);
    for (const StateIndex v : graph.touched_vertices()) {
        CHECK(graph.out_degree(v) == 1);
        CHECK(graph.in_degree(v) == 1);
    }

    const auto cycle = find_cycle(graph);
    REQUIRE(cycle.has_value());
    CHECK(*cycle == std::vector<StateIndex>{0, 1, 3, 7, 6, 4});
    CHECK(cycle->size() == 6);  // length 2n
}

TEST_CASE("singleton cycles have length 2n at larger n") {
    for (const int n : {4, 5, 6}) {
        const auto graph = edge_set({0}, n);
        const auto cycle = find_cycle(graph);
        REQUIRE(cycle.has_value());
        CHECK(cycle->size() == 2 * static_cast<std::size_t>(n));
    }
}

TEST_CASE("the full state space generates no edges") {
    std::vector<StateIndex> all;
    for (StateIndex x = 0; x < 8; ++x) all.push_back(x);
    const auto graph = edge_set(all, 3);
    CHECK(graph.edges().empty());
    CHECK_FALSE(find_cycle(graph).has_value());
    CHECK(degree_balance(graph));
}

TEST_CASE("growing a singleton drops reverse edge pairs and splits the cycle") {
    // S = {000, 100}: the two singleton cycles minus the two reverse pairs
    // leave two disjoint 4-cycles.
    const auto graph = edge_set({0, 1}, 3);
    const std::vector<ProofEdge> expected = sorted_edges({
        {1, 3}, {3, 7}, {6, 4}, {4, 0},  // survivors of the 000 cycle
        {0, 2}, {2, 6}, {7, 5}, {5, 1},  // survivors of the 100 cycle
    });
    CHECK(graph.edges() == expected);
    CHECK(degree_balance(graph));

    const auto cycle = find_cycle(graph);
    REQUIRE(cycle.has_value());
    CHECK(*cycle == std::vector<StateIndex>{0, 2, 6, 4});
}

TEST_CASE("every proper nonempty subset at n=3 is balanced and cyclic") {
    const int n = 3;
    int balanced = 0;
    int cyclic = 0;
    for (std::uint32_t mask = 1; mask <= 254; ++mask) {
        const auto graph = edge_set(mask_to_subset(mask), n);
        if (degree_balance(graph)) ++balanced;
        if (find_cycle(graph).has_value()) ++cyclic;
    }
    CHECK(balanced == 254);
    CHECK(cyclic == 254);
}

TEST_CASE("collapsed multi-edges are why degrees count generators") {
    // S = {000, 110, 111}: four edges are produced by two generators each.
    // With generator counting the graph balances; the collapsed edge set
    // alone would not (e.g. vertex 000 keeps one distinct out-edge but two
    // distinct in-edges).
    const auto graph = edge_set({0, 3, 7}, 3);
    CHECK(degree_balance(graph));
    CHECK(graph.duplicate_edge_count() == 4);
    CHECK(find_cycle(graph).has_value());

    int out_collapsed = 0, in_collapsed = 0;
    for (const auto& e : graph.edges()) {
        if (e.first == 0) ++out_collapsed;
        if (e.second == 0) ++in_collapsed;
    }
    CHECK(out_collapsed == 1);
    CHECK(in_collapsed == 2);
}

TEST_CASE("a hand-broken graph fails the balance check") {
    auto edges = edge_set({0}, 3).edges();
    edges.pop_back();
    const ProofGraph broken(3, {0}, std::move(edges));
    CHECK_FALSE(degree_balance(broken));
}

TEST_CASE("flip-image subsets generate the identical edge set") {
    std::mt19937_64 rng(51);
    const int n = 4;
    for (int k = 0; k < 50; ++k) {
        const std::uint32_t mask = 1 + static_cast<std::uint32_t>(rng() % 65534);
        const auto subset = mask_to_subset(mask);
        std::vector<StateIndex> image;
        for (const StateIndex x : subset) image.push_back(complement_state(x, n));
        CHECK(edge_set(subset, n).edges() == edge_set(image, n).edges());
    }
}

TEST_CASE("set-complement subsets generate the reversed edge set") {
    std::mt19937_64 rng(52);
    const int n = 4;
    for (int k = 0; k < 50; ++k) {
        const std::uint32_t mask = 1 + static_cast<std::uint32_t>(rng() % 65534);
        const auto subset = mask_to_subset(mask);
        std::vector<StateIndex> rest;
        for (StateIndex x = 0; x < 16; ++x)
            if (!std::binary_search(subset.begin(), subset.end(), x)) rest.push_back(x);

        const auto graph = edge_set(subset, n);
        std::vector<ProofEdge> reversed;
        for (const auto& e : graph.edges()) reversed.push_back({e.second, e.first});
        CHECK(edge_set(rest, n).edges() == sorted_edges(std::move(reversed)));
    }
}

TEST_CASE("induction step on the worked singleton example") {
    const auto report = verify_induction_step({0}, 1, 3);
    CHECK(report.branch == InductionCase::Overlap);
    CHECK(report.overlap_sites == std::vector<int>{1});
    CHECK(report.agrees);
    CHECK(report.removed_edges_pair_up);
    CHECK_FALSE(report.set_equal_to_base);
}

TEST_CASE("induction step when the complement is already inside") {
    // S = {111}, x' = 000: the new singleton cycle coincides with the old
    // one and the edge set is unchanged.
    const auto report = verify_induction_step({7}, 0, 3);
    CHECK(report.branch == InductionCase::NoOverlapComplementInSubset);
    CHECK(report.agrees);
    CHECK(report.set_equal_to_base);
    CHECK(edge_set({7}, 3).edges() == edge_set({0, 7}, 3).edges());
}

TEST_CASE("induction step with a disjoint union") {
    // S = {111}, x' = 100: no flip image of x' lies in S and the two edge
    // sets are disjoint.
    const auto report = verify_induction_step({7}, 1, 3);
    CHECK(report.branch == InductionCase::NoOverlapDisjoint);
    CHECK(report.union_disjoint);
    CHECK(report.agrees);
    CHECK_FALSE(report.set_equal_to_base);
}

TEST_CASE("complement membership alone does not freeze the edge set") {
    // S = {111, 110}, x' = 000: the complement of x' is in S, yet S also
    // holds a neighbour of that complement, which suppresses two of its
    // generators; the grown edge set strictly contains E(S). Generator
    // counting keeps the incremental construction exact anyway.
    const auto report = verify_induction_step({7, 3}, 0, 3);
    CHECK(report.branch == InductionCase::NoOverlapComplementInSubset);
    CHECK(report.agrees);
    CHECK_FALSE(report.set_equal_to_base);
    CHECK(edge_set({0, 3, 7}, 3).edges().size() > edge_set({3, 7}, 3).edges().size());
}

TEST_CASE("randomized induction steps always agree with direct construction") {
    std::mt19937_64 rng(53);
    const int n = 5;
    int overlap_cases = 0, complement_cases = 0, disjoint_cases = 0;
    for (int k = 0; k < 300; ++k) {
        const std::uint32_t size = 1 + static_cast<std::uint32_t>(rng() % 30);
        std::vector<StateIndex> subset;
        for (std::uint32_t j = 0; j < size; ++j)
            subset.push_back(static_cast<StateIndex>(rng() % 32));
        std::sort(subset.begin(), subset.end());
        subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
        if (subset.size() >= 31) continue;
        StateIndex extra = static_cast<StateIndex>(rng() % 32);
        while (std::binary_search(subset.begin(), subset.end(), extra))
            extra = static_cast<StateIndex>(rng() % 32);

        const auto report = verify_induction_step(subset, extra, n);
        CHECK(report.agrees);
        CHECK(report.removed_edges_pair_up);
        switch (report.branch) {
            case InductionCase::Overlap: ++overlap_cases; break;
            case InductionCase::NoOverlapComplementInSubset: ++complement_cases; break;
            case InductionCase::NoOverlapDisjoint: ++disjoint_cases; break;
        }
    }
    CHECK(overlap_cases > 0);
    CHECK(disjoint_cases > 0);
    (void)complement_cases;
}

TEST_CASE("unreachable flips on a reducible chain respect the flip-chain inequalities") {
    const auto model = BinaryModel::ising(3, 3, true, 0.6);
    const int n = 9;
    const auto p_log = [&](StateIndex x) { return model.log_weight(x); };
    const double tol = kDefaultTieTolerance;

    const SweepKernel standard(model, AcceptanceRule::standard(), SweepOrder::linear(n));
    const auto T = sweep_matrix(standard);

    int unreachable_pairs = 0, tie_explained = 0;
    for (StateIndex x = 0; x < state_count(n); ++x) {
        const auto seen = testutil::bfs_reachable(T, x);
        for (int i = 1; i <= n; ++i) {
            if (seen[flip_site(x, i, n)]) continue;
            ++unreachable_pairs;
            // Staying mid-sweep was impossible, so the prefix and suffix
            // inequalities cannot strictly fail; ties explain the rest.
            const double prefix_diff =
                p_log(flip_prefix(x, i, n)) - p_log(flip_prefix(x, i - 1, n));
            const double suffix_diff =
                p_log(flip_suffix(x, i + 1, n)) - p_log(flip_suffix(x, i, n));
            CHECK(prefix_diff >= -tol);
            CHECK(suffix_diff >= -tol);
            if (std::abs(prefix_diff) <= tol || std::abs(suffix_diff) <= tol) ++tie_explained;
        }
    }
    CHECK(unreachable_pairs > 0);
    CHECK(tie_explained > 0);

    // Under the modified rule no single-flip target is unreachable.
    const SweepKernel modified(model, AcceptanceRule::modified(), SweepOrder::linear(n));
    const auto M = sweep_matrix(modified);
    for (StateIndex x = 0; x < state_count(n); ++x) {
        const auto seen = testutil::bfs_reachable(M, x);
        for (int i = 1; i <= n; ++i) CHECK(seen[flip_site(x, i, n)]);
    }
}

TEST_CASE("induction step validates its arguments") {
    CHECK_THROWS_AS(verify_induction_step({0, 1}, 1, 3), InvalidInputError);
    CHECK_THROWS_AS(edge_set({9}, 3), InvalidInputError);
}
