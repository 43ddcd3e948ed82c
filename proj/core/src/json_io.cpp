#include "sweepmc/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace sweepmc {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw InvalidInputError("malformed JSON model specification");
    return j;
}

template <typename T>
T field(const json& j, const char* key) {
    if (!j.contains(key))
        throw InvalidInputError(std::string("model specification is missing '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw InvalidInputError(std::string("model field '") + key + "' has the wrong type");
    }
}

}  // namespace

BinaryModel model_from_json_text(const std::string& text,
                                 std::optional<double> coupling_override) {
    const json j = parse(text);
    if (!j.is_object()) throw InvalidInputError("model specification must be a JSON object");
    const auto variant = field<std::string>(j, "variant");
    if (variant == "ising") {
        const double coupling = coupling_override ? *coupling_override : field<double>(j, "J");
        const bool periodic = j.contains("periodic") ? field<bool>(j, "periodic") : false;
        return BinaryModel::ising(field<int>(j, "rows"), field<int>(j, "cols"), periodic,
                                  coupling);
    }
    if (coupling_override)
        throw InvalidInputError("coupling override only applies to ising models");
    if (variant == "table") return BinaryModel::table(field<std::vector<double>>(j, "log_weights"));
    if (variant == "quadratic") {
        auto weights = field<std::vector<std::vector<double>>>(j, "W");
        std::vector<double> bias;
        if (j.contains("b")) bias = field<std::vector<double>>(j, "b");
        return BinaryModel::quadratic(std::move(weights), std::move(bias));
    }
    throw InvalidInputError("unknown model variant '" + variant +
                            "' (expected ising, table, or quadratic)");
}

std::string model_to_json_text(const BinaryModel& model) {
    json j;
    if (const auto* lat = model.ising_lattice()) {
        j["variant"] = "ising";
        j["rows"] = lat->rows;
        j["cols"] = lat->cols;
        j["periodic"] = lat->periodic;
        j["J"] = lat->coupling;
    } else if (const auto* tab = model.explicit_table()) {
        j["variant"] = "table";
        j["log_weights"] = tab->log_weights;
    } else {
        const auto* q = model.quadratic_energy();
        j["variant"] = "quadratic";
        std::vector<std::vector<double>> rows;
        for (int i = 1; i <= q->n; ++i) {
            std::vector<double> row;
            for (int k = 1; k <= q->n; ++k) row.push_back(q->weight(i, k));
            rows.push_back(std::move(row));
        }
        j["W"] = rows;
        j["b"] = q->bias;
    }
    return j.dump();
}

std::string tie_report_to_json_text(const TieReport& report) {
    json j;
    j["tie_free"] = report.tie_free;
    j["tolerance"] = report.tolerance;
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"state", v.state}, {"site", v.site}});
    j["violations"] = violations;
    return j.dump();
}

std::string ergodicity_report_to_json_text(const ErgodicityReport& report,
                                           const TieReport* tie_report) {
    json j;
    j["irreducible"] = report.irreducible;
    j["aperiodic"] = report.aperiodic;
    j["ergodic"] = report.ergodic;
    j["period"] = report.period;
    j["scc_count"] = report.scc_count;
    j["reference_state"] = report.reference_state;
    j["reference_self_loop"] = report.reference_self_loop;
    if (report.closed_set_witness)
        j["closed_set_witness"] = *report.closed_set_witness;
    else
        j["closed_set_witness"] = nullptr;
    if (tie_report) j["tie_report"] = json::parse(tie_report_to_json_text(*tie_report));
    return j.dump();
}

std::string empirical_summary_to_json_text(const EmpiricalSummary& summary) {
    json j;
    j["total_sweeps"] = summary.total_sweeps;
    j["burn_in"] = summary.burn_in;
    if (summary.tv_distance_to_exact)
        j["tv_distance_to_exact"] = *summary.tv_distance_to_exact;
    else
        j["tv_distance_to_exact"] = nullptr;
    std::vector<StateIndex> states;
    states.reserve(summary.visit_counts.size());
    for (const auto& [state, count] : summary.visit_counts) states.push_back(state);
    std::sort(states.begin(), states.end());
    json counts = json::object();
    for (const StateIndex s : states)
        counts[std::to_string(s)] = summary.visit_counts.at(s);
    j["visit_counts"] = counts;
    return j.dump();
}

}  // namespace sweepmc
