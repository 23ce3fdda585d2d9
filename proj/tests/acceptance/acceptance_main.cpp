// Acceptance suite: every release-gating property of the library, one
// PASS/FAIL line per criterion. Runs in well under a minute.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "holevo/errors.hpp"
#include "holevo/evolution.hpp"
#include "holevo/information.hpp"
#include "holevo/interactions.hpp"
#include "holevo/random_gen.hpp"
#include "holevo/states.hpp"

using namespace holevo;

namespace {

int g_failures = 0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

double binary_entropy(double p) {
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double entropy_oracle(const std::vector<double>& p) {
    double h = 0.0;
    for (double v : p)
        if (v > 0.0) h -= v * std::log2(v);
    return h;
}

DensityMatrix diagonal_apparatus(const std::vector<double>& spectrum) {
    return density_from_eigensystem(spectrum, ComplexMatrix::identity(spectrum.size()));
}

// 1. Information bound sweep: 500 random (ensemble, POVM) pairs per
//    dimension, zero violations allowed.
void criterion_bound_sweep() {
    double worst_gap = -1.0;
    std::size_t violations = 0;
    for (std::size_t d = 2; d <= 4; ++d) {
        const Rng master(0xb0b0 + d);
        for (std::size_t t = 0; t < 500; ++t) {
            Rng rng = master.fork(t);
            const Ensemble e = random_ensemble(d, 2 + rng.next_u64() % 3, rng);
            const POVM m = random_povm(d, 2 + rng.next_u64() % d, rng);
            const double gap = mutual_information(e, m) - holevo_chi(e);
            worst_gap = std::max(worst_gap, gap);
            if (gap > 1e-9) ++violations;
        }
    }
    report(1, "information bound sweep, 500 pairs each at d = 2, 3, 4", violations == 0,
           "max I - chi = " + fmt(worst_gap) + ", violations = " + std::to_string(violations));
}

// 2. CNOT saturation: chi equals the source entropy H_b(0.3), and both the
//    simultaneous-eigenbasis POVM and the search reach it.
void criterion_cnot_saturation() {
    const PureState system = pure_state_from_probabilities({0.3, 0.7}, {0.0, 0.0});
    const DensityMatrix apparatus = diagonal_apparatus({1.0, 0.0});
    const Ensemble e = outcome_ensemble(evolve(system, apparatus, shift_gate(2)));

    const double chi = holevo_chi(e);
    const double oracle = binary_entropy(0.3);
    const bool chi_ok = std::abs(chi - oracle) <= 1e-3 && std::abs(oracle - 0.8813) <= 1e-3;

    const POVM eigen_povm = common_eigenbasis_povm(e, 1e-8);
    const double eigen_info = mutual_information(e, eigen_povm);
    const bool povm_ok = chi - eigen_info <= 1e-6;

    const auto search = accessible_information_search(e, 8, 17);
    const bool search_ok = search.best_info_bits >= chi - 1e-6;

    report(2, "CNOT saturation at H_b(0.3)", chi_ok && povm_ok && search_ok,
           "chi = " + fmt(chi) + ", eigenbasis I = " + fmt(eigen_info) +
               ", search I = " + fmt(search.best_info_bits));
}

// 3. Mixed-apparatus shift: chi = 1 - H_b(0.9) and the eigenbasis
//    measurement saturates.
void criterion_mixed_shift_saturation() {
    const PureState system = pure_state_from_probabilities({0.5, 0.5}, {0.0, 0.0});
    const DensityMatrix apparatus = diagonal_apparatus({0.9, 0.1});
    const Ensemble e = outcome_ensemble(evolve(system, apparatus, shift_gate(2)));

    const double chi = holevo_chi(e);
    const double oracle = 1.0 - binary_entropy(0.9);
    const bool chi_ok = std::abs(chi - oracle) <= 1e-3 && std::abs(oracle - 0.5310) <= 1e-3;

    const POVM eigen_povm = common_eigenbasis_povm(e, 1e-8);
    const bool povm_ok = chi - mutual_information(e, eigen_povm) <= 1e-6;

    report(3, "mixed-apparatus shift saturation at 1 - H_b(0.9)", chi_ok && povm_ok,
           "chi = " + fmt(chi) + ", oracle = " + fmt(oracle));
}

// 4. Shift-gate conditionals commute for random spectra and bases.
void criterion_shift_commutation() {
    double worst = 0.0;
    const Rng master(0x5417);
    for (std::size_t d = 2; d <= 6; ++d) {
        for (std::size_t t = 0; t < 50; ++t) {
            Rng rng = master.fork(d * 1000 + t);
            const ComplexMatrix basis = random_unitary(d, rng);
            const DensityMatrix apparatus =
                density_from_eigensystem(random_distribution(d, rng), basis, 1e-8);
            const PureState system = pure_state_from_probabilities(random_distribution(d, rng),
                                                                   std::vector<double>(d, 0.0));
            const Ensemble e = outcome_ensemble(evolve(system, apparatus, shift_gate(d, basis)));
            worst = std::max(worst, e.max_pairwise_commutator());
        }
    }
    report(4, "shift-gate conditional commutation, d = 2..6, 50 spectra/bases each", worst <= 1e-10,
           "max pairwise commutator = " + fmt(worst));
}

// 5. Qubit pointer-orthogonality implies commuting conditionals.
void criterion_qubit_lemma() {
    double worst_comm = 0.0;
    double worst_defect = 0.0;
    const Rng master(0x1e44);
    for (std::size_t t = 0; t < 200; ++t) {
        Rng rng = master.fork(t);
        const auto method =
            t % 2 == 0 ? FamilySearchMethod::kProjectionSearch : FamilySearchMethod::kPhaseShift;
        const InteractionUnitary family = random_von_neumann_family(2, rng.next_u64(), method);
        const DensityMatrix apparatus = diagonal_apparatus(random_distribution(2, rng));
        worst_defect = std::max(worst_defect, check_conditions(family, apparatus).von_neumann_defect);

        const PureState system = pure_state_from_probabilities({0.5, 0.5}, {0.0, 0.0});
        const auto model = evolve(system, apparatus, family);
        worst_comm = std::max(worst_comm, commutator_norm(model.conditional_states[0].matrix(),
                                                          model.conditional_states[1].matrix()));
    }
    report(5, "qubit families: orthogonal pointers imply commutation, 200 samples",
           worst_defect <= 1e-8 && worst_comm <= 1e-6,
           "max defect = " + fmt(worst_defect) +
               ", max commutator = " + fmt(worst_comm));
}

// 6. d = 3 empirical probe: projection-search families should produce no
//    commutation findings above 1e-4. Findings are reported, not asserted;
//    only generator health gates the criterion.
void criterion_qutrit_probe() {
    double worst_comm = 0.0;
    std::size_t findings = 0;
    std::size_t non_converged = 0;
    const Rng master(0xd3);
    for (std::size_t t = 0; t < 200; ++t) {
        Rng rng = master.fork(t);
        try {
            const InteractionUnitary family =
                random_von_neumann_family(3, rng.next_u64(), FamilySearchMethod::kProjectionSearch);
            const DensityMatrix apparatus = diagonal_apparatus(random_distribution(3, rng));
            const PureState system =
                pure_state_from_probabilities({1.0 / 3, 1.0 / 3, 1.0 / 3}, {0.0, 0.0, 0.0});
            const Ensemble e = outcome_ensemble(evolve(system, apparatus, family));
            const double comm = e.max_pairwise_commutator();
            worst_comm = std::max(worst_comm, comm);
            if (comm > 1e-4) ++findings;
        } catch (const NumericalError&) {
            ++non_converged;
        }
    }
    if (findings > 0) {
        std::printf("  note: %zu qutrit families with non-commuting conditionals; inconsistent with "
                    "the expected generalization, dump them via search-counterexample for review\n",
                    findings);
    }
    report(6, "d = 3 probe, 200 projection-search families", non_converged == 0,
           "findings above 1e-4 = " + std::to_string(findings) + " (expected 0), max commutator = " +
               fmt(worst_comm) + ", non-converged = " + std::to_string(non_converged));
}

// 7. Degenerate and trivial identities.
void criterion_trivial_identities() {
    bool ok = true;
    std::string detail;

    const DensityMatrix pure = diagonal_apparatus({1.0, 0.0, 0.0});
    ok &= std::abs(von_neumann_entropy(pure)) <= 1e-10;

    for (std::size_t d = 2; d <= 6; ++d) {
        const DensityMatrix mixed = diagonal_apparatus(std::vector<double>(d, 1.0 / d));
        ok &= std::abs(von_neumann_entropy(mixed) - std::log2(static_cast<double>(d))) <= 1e-10;
    }

    Rng rng(0x771);
    const Ensemble single({{1.0, random_density_matrix(3, rng)}});
    ok &= std::abs(holevo_chi(single)) <= 1e-10;

    const PureState system = pure_state_from_probabilities({0.2, 0.8}, {0.0, 0.0});
    const Ensemble shifted =
        outcome_ensemble(evolve(system, diagonal_apparatus({0.5, 0.5}), shift_gate(2)));
    const double chi_mixed = holevo_chi(shifted);
    ok &= std::abs(chi_mixed) <= 1e-10;

    report(7, "trivial identities: S(pure), S(I/d), single-state chi, mixed-apparatus chi", ok,
           "chi(maximally mixed shift) = " + fmt(chi_mixed));
}

// 8. Non-commuting gap for {|0><0|, |+><+|}: chi from the eigenvalue
//    oracle, search vs a 10^4-point planar grid, strictly positive slack.
void criterion_noncommuting_gap() {
    const DensityMatrix zero = diagonal_apparatus({1.0, 0.0});
    const DensityMatrix plus(ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}));
    const Ensemble e({{0.5, zero}, {0.5, plus}});

    const double chi = holevo_chi(e);
    const double lam = 0.5 * (1.0 + 1.0 / std::sqrt(2.0));
    const double chi_oracle = entropy_oracle({lam, 1.0 - lam});
    const bool chi_ok = std::abs(chi - chi_oracle) <= 1e-9 && std::abs(chi_oracle - 0.6009) <= 1e-3;

    // independent planar grid oracle, 10^4 angles
    double grid_best = 0.0;
    const auto px = e.probabilities();
    for (std::size_t g = 0; g < 10000; ++g) {
        const double angle = std::numbers::pi * static_cast<double>(g) / 10000.0;
        const double v[2] = {std::cos(angle), std::sin(angle)};
        const double w[2] = {-std::sin(angle), std::cos(angle)};
        double joint[2][2];
        double py[2] = {0.0, 0.0};
        for (std::size_t x = 0; x < 2; ++x) {
            const ComplexMatrix& rho = e[x].state.matrix();
            const double r00 = rho(0, 0).real(), r11 = rho(1, 1).real(), r01 = rho(0, 1).real();
            joint[x][0] = px[x] * (v[0] * v[0] * r00 + v[1] * v[1] * r11 + 2.0 * v[0] * v[1] * r01);
            joint[x][1] = px[x] * (w[0] * w[0] * r00 + w[1] * w[1] * r11 + 2.0 * w[0] * w[1] * r01);
            py[0] += joint[x][0];
            py[1] += joint[x][1];
        }
        double info = 0.0;
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y)
                if (joint[x][y] > 0.0) info += joint[x][y] * std::log2(joint[x][y] / (px[x] * py[y]));
        grid_best = std::max(grid_best, info);
    }

    const auto search = accessible_information_search(e, 8, 23);
    const bool search_ok = std::abs(search.best_info_bits - grid_best) <= 1e-4;
    const bool gap_ok = chi - search.best_info_bits > 0.05;
    const bool in_range = search.best_info_bits > 0.0 && search.best_info_bits < chi;

    report(8, "non-commuting gap for {|0>, |+>}", chi_ok && search_ok && gap_ok && in_range,
           "chi = " + fmt(chi) + ", grid I = " + fmt(grid_best) +
               ", search I = " + fmt(search.best_info_bits) +
               ", slack = " + fmt(chi - search.best_info_bits));
}

// 9. Shift models reduce to the classical convolution formula.
void criterion_convolution_oracle() {
    double worst = 0.0;
    const Rng master(0xc0);
    for (std::size_t d = 2; d <= 4; ++d) {
        for (std::size_t t = 0; t < 100; ++t) {
            Rng rng = master.fork(d * 1000 + t);
            const auto prior = random_distribution(d, rng);
            const auto spectrum = random_distribution(d, rng);
            const ComplexMatrix basis = random_unitary(d, rng);

            const PureState system = pure_state_from_probabilities(prior, std::vector<double>(d, 0.0));
            const DensityMatrix apparatus = density_from_eigensystem(spectrum, basis, 1e-8);
            const Ensemble e = outcome_ensemble(evolve(system, apparatus, shift_gate(d, basis)));

            std::vector<double> conv(d, 0.0);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t k = 0; k < d; ++k) conv[(i + k) % d] += prior[i] * spectrum[k];
            const double oracle = entropy_oracle(conv) - entropy_oracle(spectrum);
            worst = std::max(worst, std::abs(holevo_chi(e) - oracle));
        }
    }
    report(9, "shift-model chi equals H(p conv r) - H(r), 100 instances each at d = 2, 3, 4",
           worst <= 1e-9, "max |chi - oracle| = " + fmt(worst));
}

}  // namespace

int main() {
    criterion_bound_sweep();
    criterion_cnot_saturation();
    criterion_mixed_shift_saturation();
    criterion_shift_commutation();
    criterion_qubit_lemma();
    criterion_qutrit_probe();
    criterion_trivial_identities();
    criterion_noncommuting_gap();
    criterion_convolution_oracle();

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
