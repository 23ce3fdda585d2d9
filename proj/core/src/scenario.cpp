#include "holevo/scenario.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "holevo/errors.hpp"
#include "holevo/evolution.hpp"
#include "holevo/information.hpp"
#include "holevo/interactions.hpp"
#include "holevo/states.hpp"
#include "holevo/version.hpp"

namespace holevo {

namespace {

using nlohmann::json;

// A measurement counts as bound-achieving when it comes this close to chi.
// Looser than the validation tolerance: it absorbs the eigenbasis
// perturbation and search resolution.
constexpr double kSaturationTol = 1e-6;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ValidationError(path + ": " + what);
}

const json& require_field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing required field");
    return *it;
}

double parse_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

std::vector<double> parse_number_array(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(parse_number(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Complex parse_complex(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        fail(path, "expected a complex number as [re, im]");
    }
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

// Matrices are row-major nested arrays of [re, im] pairs.
ComplexMatrix parse_matrix(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) fail(path + "[0]", "expected a non-empty row");
    const std::size_t cols = j[0].size();
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string row_path = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != cols) fail(row_path, "ragged matrix row");
        for (std::size_t k = 0; k < cols; ++k) {
            m(i, k) = parse_complex(j[i][k], row_path + "[" + std::to_string(k) + "]");
        }
    }
    if (!m.all_finite()) fail(path, "matrix has non-finite entries");
    return m;
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            row.push_back({m(i, k).real(), m(i, k).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& ex) {
        throw ValidationError(std::string("scenario: ") + ex.what());
    }

    Scenario s;
    const json& system = require_field(j, "system", "scenario");
    s.system_probs = parse_number_array(require_field(system, "probs", "system"), "system.probs");
    if (system.contains("phases")) {
        s.system_phases = parse_number_array(system["phases"], "system.phases");
        if (s.system_phases.size() != s.system_probs.size()) {
            fail("system.phases", "length differs from system.probs");
        }
    } else {
        s.system_phases.assign(s.system_probs.size(), 0.0);
    }

    const json& apparatus = require_field(j, "apparatus", "scenario");
    s.apparatus_eigenvalues =
        parse_number_array(require_field(apparatus, "eigenvalues", "apparatus"), "apparatus.eigenvalues");
    if (apparatus.contains("basis")) {
        s.apparatus_basis = parse_matrix(apparatus["basis"], "apparatus.basis");
        if (!s.apparatus_basis->is_square() || s.apparatus_basis->rows() != s.apparatus_eigenvalues.size()) {
            fail("apparatus.basis", "shape does not match apparatus.eigenvalues");
        }
    }

    const json& interaction = require_field(j, "interaction", "scenario");
    const json& kind = require_field(interaction, "kind", "interaction");
    if (!kind.is_string()) fail("interaction.kind", "expected a string");
    const std::string kind_str = kind.get<std::string>();
    if (kind_str == "shift") {
        s.interaction.kind = InteractionSpec::Kind::kShift;
    } else if (kind_str == "phase_shift") {
        s.interaction.kind = InteractionSpec::Kind::kPhaseShift;
        const json& phases = require_field(interaction, "phases", "interaction");
        if (!phases.is_array() || phases.empty()) fail("interaction.phases", "expected an array of rows");
        for (std::size_t i = 0; i < phases.size(); ++i) {
            s.interaction.phases.push_back(
                parse_number_array(phases[i], "interaction.phases[" + std::to_string(i) + "]"));
        }
    } else if (kind_str == "blocks") {
        s.interaction.kind = InteractionSpec::Kind::kBlocks;
        const json& blocks = require_field(interaction, "blocks", "interaction");
        if (!blocks.is_array() || blocks.empty()) fail("interaction.blocks", "expected an array of matrices");
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            s.interaction.blocks.push_back(
                parse_matrix(blocks[i], "interaction.blocks[" + std::to_string(i) + "]"));
        }
    } else {
        fail("interaction.kind", "unknown kind '" + kind_str + "' (expected shift, phase_shift or blocks)");
    }

    if (j.contains("povm")) {
        const json& povm = j["povm"];
        if (!povm.is_array() || povm.empty()) fail("povm", "expected an array of matrices");
        std::vector<ComplexMatrix> elements;
        for (std::size_t i = 0; i < povm.size(); ++i) {
            elements.push_back(parse_matrix(povm[i], "povm[" + std::to_string(i) + "]"));
        }
        s.povm_elements = std::move(elements);
    }

    if (j.contains("options")) {
        const json& options = j["options"];
        if (!options.is_object()) fail("options", "expected an object");
        if (options.contains("tolerance")) {
            s.options.tolerance = parse_number(options["tolerance"], "options.tolerance");
            if (!(s.options.tolerance > 0.0)) fail("options.tolerance", "must be positive");
        }
        if (options.contains("seed")) {
            if (!options["seed"].is_number_unsigned()) fail("options.seed", "expected a nonnegative integer");
            s.options.seed = options["seed"].get<std::uint64_t>();
        }
        if (options.contains("restarts")) {
            if (!options["restarts"].is_number_unsigned() || options["restarts"].get<std::uint64_t>() == 0) {
                fail("options.restarts", "expected a positive integer");
            }
            s.options.restarts = options["restarts"].get<std::size_t>();
        }
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& s) {
    json j;
    j["system"]["probs"] = s.system_probs;
    j["system"]["phases"] = s.system_phases;
    j["apparatus"]["eigenvalues"] = s.apparatus_eigenvalues;
    if (s.apparatus_basis) j["apparatus"]["basis"] = matrix_to_json(*s.apparatus_basis);
    switch (s.interaction.kind) {
        case InteractionSpec::Kind::kShift:
            j["interaction"]["kind"] = "shift";
            break;
        case InteractionSpec::Kind::kPhaseShift:
            j["interaction"]["kind"] = "phase_shift";
            j["interaction"]["phases"] = s.interaction.phases;
            break;
        case InteractionSpec::Kind::kBlocks: {
            j["interaction"]["kind"] = "blocks";
            json blocks = json::array();
            for (const auto& b : s.interaction.blocks) blocks.push_back(matrix_to_json(b));
            j["interaction"]["blocks"] = std::move(blocks);
            break;
        }
    }
    if (s.povm_elements) {
        json povm = json::array();
        for (const auto& e : *s.povm_elements) povm.push_back(matrix_to_json(e));
        j["povm"] = std::move(povm);
    }
    j["options"]["tolerance"] = s.options.tolerance;
    j["options"]["seed"] = s.options.seed;
    j["options"]["restarts"] = s.options.restarts;
    return j.dump(2) + "\n";
}

std::string report_to_json(const Report& r) {
    json j;
    j["chi_bits"] = r.chi_bits;
    j["source_entropy_bits"] = r.source_entropy_bits;
    j["accessible_info_bits"] = r.accessible_info_bits;
    if (r.povm_info_bits) j["povm_info_bits"] = *r.povm_info_bits;
    j["max_commutator"] = r.max_commutator;
    j["von_neumann_defect"] = r.von_neumann_defect;
    j["bound_satisfied"] = r.bound_satisfied;
    j["saturated"] = r.saturated;
    j["provenance"]["seed"] = r.provenance.seed;
    j["provenance"]["tool_version"] = r.provenance.tool_version;
    j["provenance"]["tolerance"] = r.provenance.tolerance;
    j["provenance"]["restarts"] = r.provenance.restarts;
    j["provenance"]["timestamp"] = r.provenance.timestamp;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const Report& r) {
    std::ostringstream out;
    out.precision(17);
    out << "chi_bits,source_entropy_bits,accessible_info_bits,povm_info_bits,max_commutator,"
           "von_neumann_defect,bound_satisfied,saturated,seed,tool_version,tolerance,restarts,timestamp\n";
    out << r.chi_bits << ',' << r.source_entropy_bits << ',' << r.accessible_info_bits << ',';
    if (r.povm_info_bits) out << *r.povm_info_bits;
    out << ',' << r.max_commutator << ',' << r.von_neumann_defect << ','
        << (r.bound_satisfied ? "true" : "false") << ',' << (r.saturated ? "true" : "false") << ','
        << r.provenance.seed << ',' << r.provenance.tool_version << ',' << r.provenance.tolerance << ','
        << r.provenance.restarts << ',' << r.provenance.timestamp << '\n';
    return out.str();
}

Report run_scenario(const Scenario& s) {
    const double tol = s.options.tolerance;
    const std::size_t d_sys = s.system_probs.size();
    const std::size_t d_app = s.apparatus_eigenvalues.size();

    const PureState system = pure_state_from_probabilities(s.system_probs, s.system_phases, tol);
    const ComplexMatrix basis =
        s.apparatus_basis ? *s.apparatus_basis : ComplexMatrix::identity(d_app);
    const DensityMatrix apparatus = density_from_eigensystem(s.apparatus_eigenvalues, basis, tol);

    InteractionUnitary u = [&] {
        switch (s.interaction.kind) {
            case InteractionSpec::Kind::kShift:
                if (d_sys != d_app) throw ValidationError("interaction: shift needs matching dimensions");
                return shift_gate(d_app, basis);
            case InteractionSpec::Kind::kPhaseShift:
                if (d_sys != d_app) {
                    throw ValidationError("interaction: phase_shift needs matching dimensions");
                }
                return phase_shift_family(d_app, s.interaction.phases, basis);
            case InteractionSpec::Kind::kBlocks:
            default:
                if (s.interaction.blocks.size() != d_sys) {
                    throw ValidationError("interaction.blocks: need one block per system level");
                }
                for (const auto& b : s.interaction.blocks) {
                    if (!b.is_square() || b.rows() != d_app) {
                        throw ValidationError("interaction.blocks: block shape must match apparatus");
                    }
                }
                return InteractionUnitary::from_blocks(s.interaction.blocks, tol);
        }
    }();

    const MeasurementOutcomeModel model = evolve(system, apparatus, u);
    const Ensemble ensemble = outcome_ensemble(model);

    Report report;
    report.chi_bits = holevo_chi(ensemble);
    report.source_entropy_bits = shannon_entropy(model.prior, std::max(tol, 1e-10));
    report.max_commutator = ensemble.max_pairwise_commutator();
    report.von_neumann_defect = check_conditions(u, apparatus).von_neumann_defect;

    const SearchResult search = accessible_information_search(ensemble, s.options.restarts, s.options.seed);
    report.accessible_info_bits = search.best_info_bits;

    double best_info = search.best_info_bits;
    if (s.povm_elements) {
        const POVM povm(*s.povm_elements, std::max(tol, 1e-10));
        report.povm_info_bits = mutual_information(ensemble, povm);
        report.bound_satisfied = *report.povm_info_bits <= report.chi_bits + tol;
        best_info = std::max(best_info, *report.povm_info_bits);
    } else {
        report.bound_satisfied = report.accessible_info_bits <= report.chi_bits + tol;
    }
    report.saturated = report.chi_bits - best_info <= kSaturationTol;

    report.provenance.seed = s.options.seed;
    report.provenance.tool_version = kToolVersion;
    report.provenance.tolerance = tol;
    report.provenance.restarts = s.options.restarts;
    report.provenance.timestamp = utc_timestamp();
    return report;
}

}  // namespace holevo
