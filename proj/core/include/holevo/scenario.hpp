#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holevo/complex_matrix.hpp"

namespace holevo {

// Interaction description as it appears in scenario files. "shift" and
// "phase_shift" are built against the apparatus eigenbasis; "blocks" gives
// the conditional unitaries verbatim.
struct InteractionSpec {
    enum class Kind { kShift, kPhaseShift, kBlocks };
    Kind kind = Kind::kShift;
    std::vector<std::vector<double>> phases;  // kPhaseShift only
    std::vector<ComplexMatrix> blocks;        // kBlocks only
};

struct ScenarioOptions {
    double tolerance = 1e-10;
    std::uint64_t seed = 0;
    std::size_t restarts = 16;
};

struct Scenario {
    std::vector<double> system_probs;
    std::vector<double> system_phases;  // defaults to all-zero when omitted
    std::vector<double> apparatus_eigenvalues;
    std::optional<ComplexMatrix> apparatus_basis;  // identity when omitted
    InteractionSpec interaction;
    std::optional<std::vector<ComplexMatrix>> povm_elements;
    ScenarioOptions options;
};

struct ReportProvenance {
    std::uint64_t seed = 0;
    std::string tool_version;
    double tolerance = 1e-10;
    std::size_t restarts = 0;
    std::string timestamp;  // RFC 3339 UTC; excluded from golden comparisons
};

struct Report {
    double chi_bits = 0.0;
    double source_entropy_bits = 0.0;
    double accessible_info_bits = 0.0;
    std::optional<double> povm_info_bits;
    double max_commutator = 0.0;
    double von_neumann_defect = 0.0;
    bool bound_satisfied = false;
    bool saturated = false;
    ReportProvenance provenance;
};

// Parsing throws ValidationError with the offending field (or parse
// position) in the message.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

std::string scenario_to_json(const Scenario& s);
std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);

// Full pipeline: states -> interaction -> evolution -> information
// measures -> measurement search. Deterministic per (scenario, seed) up to
// the provenance timestamp.
Report run_scenario(const Scenario& s);

}  // namespace holevo
