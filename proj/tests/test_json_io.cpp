#include <doctest.h>

#include "sweepmc/json_io.hpp"
#include "sweepmc/proof_graph.hpp"

using namespace sweepmc;

TEST_CASE("ising model specifications parse and round trip") {
    const std::string text = R"({"variant":"ising","rows":3,"cols":3,"periodic":true,"J":0.5})";
    const auto model = model_from_json_text(text);
    REQUIRE(model.ising_lattice() != nullptr);
    CHECK(model.site_count() == 9);
    CHECK(model.ising_lattice()->coupling == 0.5);
    CHECK(model.ising_lattice()->periodic);

    const auto again = model_from_json_text(model_to_json_text(model));
    CHECK(again.ising_lattice()->coupling == 0.5);

    const auto overridden = model_from_json_text(text, 1.25);
    CHECK(overridden.ising_lattice()->coupling == 1.25);
}

TEST_CASE("table and quadratic specifications parse") {
    const auto table = model_from_json_text(R"({"variant":"table","log_weights":[0,1,0.5,2]})");
    REQUIRE(table.explicit_table() != nullptr);
    CHECK(table.site_count() == 2);

    const auto quad = model_from_json_text(
        R"({"variant":"quadratic","W":[[0,0.5],[0.5,0]],"b":[0.1,-0.2]})");
    REQUIRE(quad.quadratic_energy() != nullptr);
    CHECK(quad.site_count() == 2);

    // bias is optional
    const auto no_bias = model_from_json_text(R"({"variant":"quadratic","W":[[0,1],[1,0]]})");
    CHECK(no_bias.quadratic_energy()->bias == std::vector<double>{0.0, 0.0});

    const auto round = model_from_json_text(model_to_json_text(quad));
    CHECK(round.quadratic_energy()->weight(1, 2) == 0.5);
}

TEST_CASE("malformed model specifications are rejected") {
    CHECK_THROWS_AS(model_from_json_text("{oops"), InvalidInputError);
    CHECK_THROWS_AS(model_from_json_text("[1,2]"), InvalidInputError);
    CHECK_THROWS_AS(model_from_json_text(R"({"variant":"bogus"})"), InvalidInputError);
    CHECK_THROWS_AS(model_from_json_text(R"({"variant":"ising","rows":3})"), InvalidInputError);
    CHECK_THROWS_AS(model_from_json_text(R"({"variant":"table","log_weights":[0,1,2]})"),
                    InvalidInputError);
    CHECK_THROWS_AS(
        model_from_json_text(R"({"variant":"table","log_weights":[0,1]})", 0.3),
        InvalidInputError);
}

TEST_CASE("ergodicity reports serialize flags, period and witness") {
    ErgodicityReport report;
    report.irreducible = false;
    report.aperiodic = true;
    report.ergodic = false;
    report.period = 1;
    report.scc_count = 3;
    report.closed_set_witness = std::vector<StateIndex>{2, 5};
    const auto text = ergodicity_report_to_json_text(report);
    CHECK(text.find("\"ergodic\":false") != std::string::npos);
    CHECK(text.find("\"scc_count\":3") != std::string::npos);
    CHECK(text.find("\"closed_set_witness\":[2,5]") != std::string::npos);

    TieReport ties;
    ties.tie_free = false;
    ties.violations.push_back({4, 2});
    const auto with_ties = ergodicity_report_to_json_text(report, &ties);
    CHECK(with_ties.find("\"tie_report\"") != std::string::npos);
    CHECK(with_ties.find("\"tie_free\":false") != std::string::npos);
}

TEST_CASE("empirical summaries serialize counts in state order") {
    EmpiricalSummary summary;
    summary.total_sweeps = 10;
    summary.burn_in = 2;
    summary.visit_counts[3] = 5;
    summary.visit_counts[0] = 3;
    summary.tv_distance_to_exact = 0.125;
    const auto text = empirical_summary_to_json_text(summary);
    CHECK(text.find("\"total_sweeps\":10") != std::string::npos);
    CHECK(text.find("\"tv_distance_to_exact\":0.125") != std::string::npos);
    CHECK(text.find("\"0\":3") != std::string::npos);
    CHECK(text.find("\"3\":5") != std::string::npos);
}
