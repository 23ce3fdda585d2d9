// Command-line front end: scenario simulation, bound verification sweeps,
// and the search for non-commuting conditional states under
// pointer-orthogonal interactions.
//
// Exit codes: 0 ok, 2 input error, 3 numerical error, 4 property violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "holevo/errors.hpp"
#include "holevo/evolution.hpp"
#include "holevo/information.hpp"
#include "holevo/interactions.hpp"
#include "holevo/random_gen.hpp"
#include "holevo/scenario.hpp"
#include "holevo/states.hpp"
#include "holevo/version.hpp"

namespace {

enum class LogLevel { kOff = 0, kInfo = 1, kDebug = 2 };

LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("HOLEVO_LOG");
        if (env == nullptr) return LogLevel::kOff;
        const std::string v(env);
        if (v == "debug") return LogLevel::kDebug;
        if (v == "info") return LogLevel::kInfo;
        return LogLevel::kOff;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::kInfo) std::cerr << "[holevo] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::kDebug) std::cerr << "[holevo:debug] " << msg << "\n";
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw holevo::ValidationError("cannot open output file: " + path);
    out << text;
}

int cmd_simulate(const std::string& scenario_path, const std::string& out_path, bool csv,
                 std::optional<double> tol_override) {
    holevo::Scenario scenario = holevo::load_scenario(scenario_path);
    if (tol_override) {
        if (!(*tol_override > 0.0)) throw holevo::ValidationError("--tol must be positive");
        scenario.options.tolerance = *tol_override;
    }
    log_info("simulating " + scenario_path);
    const holevo::Report report = holevo::run_scenario(scenario);
    log_debug("chi=" + std::to_string(report.chi_bits) +
              " accessible=" + std::to_string(report.accessible_info_bits));
    write_output(csv ? holevo::report_to_csv(report) : holevo::report_to_json(report), out_path);
    return 0;
}

int cmd_verify_bound(std::size_t dim, std::size_t trials, std::uint64_t seed) {
    if (dim < 2 || dim > 8) throw holevo::ValidationError("--dim must be in [2, 8]");
    if (trials < 1) throw holevo::ValidationError("--trials must be >= 1");

    const holevo::Rng master(seed);
    double max_gap = -1.0;
    std::vector<std::uint64_t> failing_trials;
    for (std::size_t t = 0; t < trials; ++t) {
        holevo::Rng rng = master.fork(t);
        const std::size_t n_states = 2 + rng.next_u64() % 3;
        const std::size_t n_outcomes = 2 + rng.next_u64() % dim;
        const holevo::Ensemble e = holevo::random_ensemble(dim, n_states, rng);
        const holevo::POVM m = holevo::random_povm(dim, n_outcomes, rng);

        const double gap = holevo::mutual_information(e, m) - holevo::holevo_chi(e);
        max_gap = std::max(max_gap, gap);
        if (gap > 1e-9) failing_trials.push_back(t);
        log_debug("trial " + std::to_string(t) + " gap " + std::to_string(gap));
    }

    nlohmann::json summary;
    summary["dim"] = dim;
    summary["trials"] = trials;
    summary["seed"] = seed;
    summary["max_info_minus_chi"] = max_gap;
    summary["failures"] = failing_trials.size();
    summary["failing_trials"] = failing_trials;
    std::cout << summary.dump(2) << "\n";

    if (!failing_trials.empty()) {
        std::cerr << "bound violated in " << failing_trials.size() << " trial(s)\n";
        return 4;
    }
    return 0;
}

int cmd_search_counterexample(std::size_t dim, std::size_t trials, std::uint64_t seed,
                              const std::string& dump_dir) {
    if (dim < 2) throw holevo::ValidationError("--dim must be >= 2");
    if (trials < 1) throw holevo::ValidationError("--trials must be >= 1");
    if (!dump_dir.empty()) std::filesystem::create_directories(dump_dir);

    constexpr double kFindingThreshold = 1e-4;
    const holevo::Rng master(seed);
    std::size_t converged = 0;
    std::size_t non_converged = 0;
    double worst_commutator = 0.0;
    std::vector<std::uint64_t> finding_trials;

    for (std::size_t t = 0; t < trials; ++t) {
        holevo::Rng rng = master.fork(t);
        std::optional<holevo::InteractionUnitary> family;
        try {
            family = holevo::random_von_neumann_family(dim, rng.next_u64(),
                                                       holevo::FamilySearchMethod::kProjectionSearch);
        } catch (const holevo::NumericalError& e) {
            ++non_converged;
            log_info("trial " + std::to_string(t) + ": " + e.what());
            continue;
        }
        ++converged;

        // The generated family is pointer-orthogonal in the computational
        // basis, so the probe apparatus is a random spectrum in that basis.
        const auto spectrum = holevo::random_distribution(dim, rng);
        const holevo::DensityMatrix apparatus =
            holevo::density_from_eigensystem(spectrum, holevo::ComplexMatrix::identity(dim));
        const holevo::PureState system = holevo::pure_state_from_probabilities(
            std::vector<double>(dim, 1.0 / static_cast<double>(dim)), std::vector<double>(dim, 0.0));

        const holevo::MeasurementOutcomeModel model = holevo::evolve(system, apparatus, *family);
        const holevo::Ensemble conditionals = holevo::outcome_ensemble(model);
        const double commutator = conditionals.max_pairwise_commutator();
        worst_commutator = std::max(worst_commutator, commutator);
        log_debug("trial " + std::to_string(t) + " commutator " + std::to_string(commutator));

        if (commutator > kFindingThreshold) {
            finding_trials.push_back(t);
            const double defect = holevo::check_conditions(*family, apparatus).von_neumann_defect;

            holevo::Scenario finding;
            finding.system_probs.assign(dim, 1.0 / static_cast<double>(dim));
            finding.system_phases.assign(dim, 0.0);
            finding.apparatus_eigenvalues = spectrum;
            finding.interaction.kind = holevo::InteractionSpec::Kind::kBlocks;
            finding.interaction.blocks = family->blocks();
            finding.options.seed = seed;

            nlohmann::json j = nlohmann::json::parse(holevo::scenario_to_json(finding));
            j["finding"] = {{"trial", t},
                            {"max_pairwise_commutator", commutator},
                            {"von_neumann_defect", defect}};
            if (!dump_dir.empty()) {
                const auto path =
                    std::filesystem::path(dump_dir) / ("finding_" + std::to_string(t) + ".json");
                std::ofstream out(path);
                out << j.dump(2) << "\n";
                log_info("dumped " + path.string());
            } else {
                std::cout << j.dump(2) << "\n";
            }
        }
    }

    nlohmann::json summary;
    summary["dim"] = dim;
    summary["trials"] = trials;
    summary["seed"] = seed;
    summary["converged"] = converged;
    summary["non_converged"] = non_converged;
    summary["findings"] = finding_trials.size();
    summary["finding_trials"] = finding_trials;
    summary["max_pairwise_commutator"] = worst_commutator;
    std::cout << summary.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Measurement-interaction models and information-gain certification"};
    app.set_version_flag("--version", std::string(holevo::kToolVersion));
    app.require_subcommand(1);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Run a scenario file and emit a report");
    std::string scenario_path;
    std::string out_path;
    bool csv = false;
    double tol = 0.0;
    simulate->add_option("--scenario", scenario_path, "Scenario JSON path")->required();
    simulate->add_option("--out", out_path, "Report output path (default: stdout)");
    simulate->add_flag("--csv", csv, "Emit the report as CSV instead of JSON");
    auto* tol_opt = simulate->add_option("--tol", tol, "Override the scenario tolerance");

    // verify-bound
    auto* verify = app.add_subcommand("verify-bound", "Random (ensemble, POVM) sweep of the information bound");
    std::size_t v_dim = 2;
    std::size_t v_trials = 100;
    std::uint64_t v_seed = 0;
    verify->add_option("--dim", v_dim, "Hilbert space dimension")->required();
    verify->add_option("--trials", v_trials, "Number of random instances")->required();
    verify->add_option("--seed", v_seed, "Random seed")->required();

    // search-counterexample
    auto* search = app.add_subcommand(
        "search-counterexample",
        "Probe pointer-orthogonal interactions for non-commuting conditional states");
    std::size_t s_dim = 3;
    std::size_t s_trials = 100;
    std::uint64_t s_seed = 0;
    std::string dump_dir;
    search->add_option("--dim", s_dim, "Hilbert space dimension")->required();
    search->add_option("--trials", s_trials, "Number of random families")->required();
    search->add_option("--seed", s_seed, "Random seed")->required();
    search->add_option("--dump-dir", dump_dir, "Directory for finding dumps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (simulate->parsed()) {
            return cmd_simulate(scenario_path, out_path, csv,
                                tol_opt->count() > 0 ? std::optional<double>(tol) : std::nullopt);
        }
        if (verify->parsed()) return cmd_verify_bound(v_dim, v_trials, v_seed);
        if (search->parsed()) return cmd_search_counterexample(s_dim, s_trials, s_seed, dump_dir);
    } catch (const holevo::ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const holevo::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
