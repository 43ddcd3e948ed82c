#pragma once

#include <optional>
#include <string>

#include "sweepmc/chain.hpp"
#include "sweepmc/ergodicity.hpp"
#include "sweepmc/model.hpp"

namespace sweepmc {

/// Parses a model specification of the form
///   {"variant":"ising","rows":3,"cols":3,"periodic":true,"J":0.5}
///   {"variant":"table","log_weights":[...]}
///   {"variant":"quadratic","W":[[...]],"b":[...]}        (b optional)
/// A coupling override replaces J and is only valid for ising models.
BinaryModel model_from_json_text(const std::string& text,
                                 std::optional<double> coupling_override = std::nullopt);

std::string model_to_json_text(const BinaryModel& model);

std::string tie_report_to_json_text(const TieReport& report);

/// Flags, period, scc_count and the witness as a list of state indices.
std::string ergodicity_report_to_json_text(const ErgodicityReport& report,
                                           const TieReport* tie_report = nullptr);

std::string empirical_summary_to_json_text(const EmpiricalSummary& summary);

}  // namespace sweepmc
