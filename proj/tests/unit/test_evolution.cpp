#include <array>
#include <cmath>

#include "doctest.h"
#include "holevo/errors.hpp"
#include "holevo/evolution.hpp"
#include "holevo/random_gen.hpp"
#include "test_helpers.hpp"

using namespace holevo;

namespace {

// 4x4 flat-array multiply, the hand oracle for the CNOT pipeline.
std::array<Complex, 16> mul4(const std::array<Complex, 16>& a, const std::array<Complex, 16>& b) {
    std::array<Complex, 16> out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) out[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
    return out;
}

}  // namespace

TEST_CASE("cnot pipeline against the hand oracle") {
    const PureState system = pure_state_from_probabilities({0.3, 0.7}, {0.0, 0.0});
    const DensityMatrix apparatus = density_from_eigensystem({1.0, 0.0}, ComplexMatrix::identity(2));
    const InteractionUnitary cnot = shift_gate(2);

    const auto model = evolve(system, apparatus, cnot);

    CHECK(model.prior[0] == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(model.prior[1] == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(model.conditional_states[0](0, 0).real() == doctest::Approx(1.0));
    CHECK(model.conditional_states[1](1, 1).real() == doctest::Approx(1.0));

    // oracle: joint = U (|psi><psi| (x) |0><0|) U^dag, traced by hand
    const double a = std::sqrt(0.3), b = std::sqrt(0.7);
    std::array<Complex, 16> joint_in{};
    // |psi>|0> has amplitudes (a, 0, b, 0) in the joint basis
    const std::array<Complex, 4> vec{Complex{a, 0.0}, Complex{}, Complex{b, 0.0}, Complex{}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) joint_in[i * 4 + j] = vec[i] * std::conj(vec[j]);
    const std::array<Complex, 16> cnot_mat = {
        Complex{1}, Complex{}, Complex{}, Complex{}, Complex{}, Complex{1}, Complex{}, Complex{},
        Complex{}, Complex{}, Complex{}, Complex{1}, Complex{}, Complex{}, Complex{1}, Complex{}};
    const auto joint_out = mul4(mul4(cnot_mat, joint_in), cnot_mat);
    // partial trace over the system by hand: out[k][l] = sum_i joint[(i,k),(i,l)]
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
            Complex expected{0.0, 0.0};
            for (int i = 0; i < 2; ++i) expected += joint_out[(i * 2 + k) * 4 + (i * 2 + l)];
            CHECK(std::abs(model.post_state(k, l) - expected) < 1e-14);
        }
    CHECK(model.post_state(0, 0).real() == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(model.post_state(1, 1).real() == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("identity interaction leaves the apparatus untouched") {
    Rng rng(8);
    const DensityMatrix rho = random_density_matrix(3, rng);
    const InteractionUnitary u = InteractionUnitary::from_blocks(
        {ComplexMatrix::identity(3), ComplexMatrix::identity(3), ComplexMatrix::identity(3)});
    const PureState system = pure_state_from_probabilities({0.2, 0.5, 0.3}, {0.0, 0.0, 0.0});
    const auto model = evolve(system, rho, u);
    CHECK(max_abs_diff(model.post_state.matrix(), rho.matrix()) < 1e-12);
}

TEST_CASE("shift gate fixes the maximally mixed apparatus") {
    Rng rng(21);
    for (std::size_t d = 2; d <= 5; ++d) {
        const DensityMatrix mixed =
            density_from_eigensystem(std::vector<double>(d, 1.0 / d), ComplexMatrix::identity(d));
        const PureState system =
            pure_state_from_probabilities(random_distribution(d, rng), std::vector<double>(d, 0.0));
        const auto model = evolve(system, mixed, shift_gate(d));
        for (const auto& rho_i : model.conditional_states) {
            CHECK(max_abs_diff(rho_i.matrix(), mixed.matrix()) < 1e-14);
        }
    }
}

TEST_CASE("conservation properties on random instances") {
    Rng rng(34);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t d = 2 + rng.next_u64() % 3;
        const DensityMatrix rho = random_density_matrix(d, rng);
        const PureState system =
            pure_state_from_probabilities(random_distribution(d, rng), std::vector<double>(d, 0.0));
        std::vector<ComplexMatrix> blocks;
        for (std::size_t i = 0; i < d; ++i) blocks.push_back(random_unitary(d, rng));
        const auto model = evolve(system, rho, InteractionUnitary::from_blocks(std::move(blocks), 1e-8));

        CHECK(std::abs(model.post_state.matrix().trace() - Complex{1.0, 0.0}) < 1e-12);
        const auto eig = model.post_state.eigensystem();
        CHECK(eig.eigenvalues.back() > -1e-10);

        ComplexMatrix mixture(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            mixture += Complex{model.prior[i], 0.0} * model.conditional_states[i].matrix();
        }
        CHECK(max_abs_diff(mixture, model.post_state.matrix()) < 1e-10);
    }
}

TEST_CASE("rectangular control: qubit system, qutrit apparatus") {
    // Two blocks on a 3-level apparatus: identity and the 3-cycle. The
    // cycle has zero diagonal, so the pointer condition holds and the
    // conditionals commute for a diagonal apparatus.
    ComplexMatrix cycle(3, 3);
    cycle(1, 0) = cycle(2, 1) = cycle(0, 2) = 1.0;
    const InteractionUnitary u =
        InteractionUnitary::from_blocks({ComplexMatrix::identity(3), cycle});
    CHECK(u.d_sys() == 2);
    CHECK(u.d_app() == 3);

    const PureState system = pure_state_from_probabilities({0.4, 0.6}, {0.0, 0.0});
    const DensityMatrix apparatus =
        density_from_eigensystem({0.6, 0.3, 0.1}, ComplexMatrix::identity(3));
    const auto model = evolve(system, apparatus, u);

    CHECK(model.post_state.dim() == 3);
    CHECK(check_conditions(u, apparatus).von_neumann_defect == 0.0);
    CHECK(commutator_norm(model.conditional_states[0].matrix(),
                          model.conditional_states[1].matrix()) < 1e-14);
}

TEST_CASE("system phases do not change the outcome model") {
    Rng rng(55);
    const DensityMatrix apparatus = random_density_matrix(3, rng);
    std::vector<ComplexMatrix> blocks;
    for (int i = 0; i < 3; ++i) blocks.push_back(random_unitary(3, rng));
    const InteractionUnitary u = InteractionUnitary::from_blocks(std::move(blocks), 1e-8);

    const std::vector<double> probs = random_distribution(3, rng);
    const auto flat = evolve(pure_state_from_probabilities(probs, {0.0, 0.0, 0.0}), apparatus, u);
    const auto phased =
        evolve(pure_state_from_probabilities(probs, {0.3, 1.9, 4.2}), apparatus, u);

    CHECK(max_abs_diff(flat.post_state.matrix(), phased.post_state.matrix()) < 1e-12);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(flat.prior[i] == doctest::Approx(phased.prior[i]).epsilon(1e-12));
        CHECK(max_abs_diff(flat.conditional_states[i].matrix(),
                           phased.conditional_states[i].matrix()) == 0.0);
    }
}

TEST_CASE("evolve rejections") {
    const PureState qubit = pure_state_from_probabilities({0.5, 0.5}, {0.0, 0.0});
    const DensityMatrix qutrit =
        density_from_eigensystem({0.5, 0.3, 0.2}, ComplexMatrix::identity(3));
    CHECK_THROWS_AS(evolve(qubit, qutrit, shift_gate(2)), ValidationError);

    // a block that passes loose construction but fails the evolve gate
    ComplexMatrix skew = ComplexMatrix::identity(2);
    skew(0, 0) += 1e-6;
    const InteractionUnitary u =
        InteractionUnitary::from_blocks({ComplexMatrix::identity(2), skew}, 1e-4);
    const DensityMatrix rho = density_from_eigensystem({0.6, 0.4}, ComplexMatrix::identity(2));
    CHECK_THROWS_AS(evolve(qubit, rho, u), NumericalError);
}
