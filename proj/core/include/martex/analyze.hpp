#pragma once

#include "martex/instance.hpp"
#include "martex/wep.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace martex {

/// The check battery, in the fixed report order.
enum class Check {
    ConvexOrder,
    Validate,
    IntersectionScreen,
    TwoLink,
    Erasability,
    Wep,
    NetsSaturation,
    Extremality,
    MeshCycles,
    FreePool,
};

const std::vector<Check>& all_checks();
std::string check_name(Check c);
std::optional<Check> check_from_name(const std::string& name);
/// Parses a comma-separated subset; throws Error("parse") on unknown names.
std::vector<Check> parse_check_list(const std::string& csv);

struct CheckOutcome {
    std::string name;
    std::string result;
    nlohmann::ordered_json certificate; // null when oracle-only
    bool oracle_only = false;
    std::string note;
};

struct AnalysisReport {
    uint64_t seed = 0;
    std::vector<CheckOutcome> checks;
    bool internal_violation = false; // a proved theorem failed: tool bug
};

AnalysisReport run_analysis(const InstanceFile& instance, const std::vector<Check>& checks,
                            uint64_t seed);

nlohmann::ordered_json report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

// --- certificate encoding helpers shared by reports and their verifiers ---

nlohmann::ordered_json path_function_to_json(const PathFunction& f);
PathFunction path_function_from_json(const nlohmann::json& v);

struct VerifyOutcome {
    std::string item;
    bool ok = false;
    std::string detail;
};

/// Replays every certificate of a report (analysis, decomposition or
/// perturbation document) against the instance, with no access to the
/// oracles that produced the verdicts.
std::vector<VerifyOutcome> verify_report(const InstanceFile& instance,
                                         const nlohmann::json& report);

} // namespace martex
