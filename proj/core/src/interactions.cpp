#include "holevo/interactions.hpp"

#include <cmath>
#include <numbers>

#include "holevo/errors.hpp"
#include "holevo/hermitian_eig.hpp"
#include "holevo/random_gen.hpp"

namespace holevo {

namespace {

// Cyclic shift S|k> = |k+1 mod d>, raised to the i-th power.
ComplexMatrix shift_power(std::size_t d, std::size_t i) {
    ComplexMatrix s(d, d);
    for (std::size_t k = 0; k < d; ++k) s((k + i) % d, k) = 1.0;
    return s;
}

// Nearest unitary A (A^dagger A)^{-1/2}; fails on (near-)singular input.
ComplexMatrix polar_unitary(const ComplexMatrix& a) {
    const auto eig = hermitian_eigendecomposition(a.dagger() * a, 1e-8);
    std::vector<double> inv_sqrt(eig.eigenvalues.size());
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        if (eig.eigenvalues[k] < 1e-12) throw NumericalError("singular polar factor");
        inv_sqrt[k] = 1.0 / std::sqrt(eig.eigenvalues[k]);
    }
    return a * from_eigensystem(inv_sqrt, eig.eigenvectors);
}

ComplexMatrix zero_diagonal(ComplexMatrix m) {
    for (std::size_t k = 0; k < m.rows(); ++k) m(k, k) = 0.0;
    return m;
}

// Max diagonal magnitude of V_i^dagger V_j over all block pairs i != j:
// the pointer-orthogonality defect in the computational apparatus basis.
double family_defect(const std::vector<ComplexMatrix>& blocks) {
    double defect = 0.0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (i == j) continue;
            const ComplexMatrix m = blocks[i].dagger() * blocks[j];
            for (std::size_t k = 0; k < m.rows(); ++k) defect = std::max(defect, std::abs(m(k, k)));
        }
    }
    return defect;
}

}  // namespace

InteractionUnitary InteractionUnitary::from_blocks(std::vector<ComplexMatrix> blocks, double tol) {
    if (blocks.empty()) throw ValidationError("interaction needs at least one block");
    const std::size_t d_app = blocks.front().rows();
    for (const auto& b : blocks) {
        if (!b.is_square() || b.rows() != d_app) {
            throw ValidationError("interaction blocks must be square with equal dimension");
        }
        if (!b.all_finite()) throw ValidationError("interaction block has non-finite entries");
        if (unitarity_defect(b) > tol) throw NumericalError("non-unitary interaction block");
    }
    return InteractionUnitary(std::move(blocks));
}

ComplexMatrix InteractionUnitary::full_matrix() const {
    const std::size_t ds = d_sys(), da = d_app();
    ComplexMatrix u(ds * da, ds * da);
    for (std::size_t i = 0; i < ds; ++i)
        for (std::size_t k = 0; k < da; ++k)
            for (std::size_t l = 0; l < da; ++l) u(i * da + k, i * da + l) = blocks_[i](k, l);
    return u;
}

double InteractionUnitary::max_block_unitarity_defect() const {
    double defect = 0.0;
    for (const auto& b : blocks_) defect = std::max(defect, unitarity_defect(b));
    return defect;
}

InteractionUnitary shift_gate(std::size_t d, const ComplexMatrix& apparatus_basis) {
    if (d < 2) throw ValidationError("shift gate needs dimension >= 2");
    if (!apparatus_basis.is_square() || apparatus_basis.rows() != d) {
        throw ValidationError("apparatus basis has wrong dimension");
    }
    if (unitarity_defect(apparatus_basis) > 1e-10) throw NumericalError("basis not unitary");

    const ComplexMatrix basis_dag = apparatus_basis.dagger();
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        blocks.push_back(apparatus_basis * shift_power(d, i) * basis_dag);
    }
    return InteractionUnitary::from_blocks(std::move(blocks));
}

InteractionUnitary shift_gate(std::size_t d) { return shift_gate(d, ComplexMatrix::identity(d)); }

InteractionUnitary phase_shift_family(std::size_t d, const std::vector<std::vector<double>>& phases,
                                      const ComplexMatrix& apparatus_basis) {
    if (d < 2) throw ValidationError("phase-shift family needs dimension >= 2");
    if (phases.size() != d) throw ValidationError("phase table must have one row per system level");
    for (const auto& row : phases) {
        if (row.size() != d) throw ValidationError("phase table rows must have length d");
    }
    if (!apparatus_basis.is_square() || apparatus_basis.rows() != d) {
        throw ValidationError("apparatus basis has wrong dimension");
    }
    if (unitarity_defect(apparatus_basis) > 1e-10) throw NumericalError("basis not unitary");

    const ComplexMatrix basis_dag = apparatus_basis.dagger();
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        ComplexMatrix block = shift_power(d, i);
        for (std::size_t k = 0; k < d; ++k) {
            const Complex phase{std::cos(phases[i][k]), std::sin(phases[i][k])};
            for (std::size_t j = 0; j < d; ++j) block(k, j) *= phase;
        }
        blocks.push_back(apparatus_basis * block * basis_dag);
    }
    return InteractionUnitary::from_blocks(std::move(blocks));
}

ConditionReport check_conditions(const InteractionUnitary& u, const DensityMatrix& rho_apparatus) {
    if (u.d_app() != rho_apparatus.dim()) throw ValidationError("dimension mismatch");
    const std::size_t d_app = u.d_app();
    const auto eig = rho_apparatus.eigensystem();

    ConditionReport report{};
    report.unitarity_defect = u.max_block_unitarity_defect();
    report.controlled_form = true;

    double defect = 0.0;
    for (std::size_t i = 0; i < u.d_sys(); ++i) {
        for (std::size_t j = 0; j < u.d_sys(); ++j) {
            if (i == j) continue;
            const ComplexMatrix m = u.block(i).dagger() * u.block(j);
            for (std::size_t k = 0; k < d_app; ++k) {
                Complex overlap{0.0, 0.0};
                for (std::size_t a = 0; a < d_app; ++a)
                    for (std::size_t b = 0; b < d_app; ++b)
                        overlap += std::conj(eig.eigenvectors(a, k)) * m(a, b) * eig.eigenvectors(b, k);
                defect = std::max(defect, std::abs(overlap));
            }
        }
    }
    report.von_neumann_defect = defect;
    return report;
}

InteractionUnitary random_von_neumann_family(std::size_t d, std::uint64_t seed, FamilySearchMethod method) {
    if (d < 2) throw ValidationError("family needs dimension >= 2");
    Rng rng(seed);

    if (method == FamilySearchMethod::kPhaseShift) {
        std::vector<std::vector<double>> phases(d, std::vector<double>(d));
        for (auto& row : phases)
            for (double& phi : row) phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
        // A common pointer-basis rotation keeps the orthogonality condition
        // (it cancels in V_i^dagger V_j) while making the sample generic.
        const ComplexMatrix c = random_unitary(d, rng);
        auto family = phase_shift_family(d, phases, ComplexMatrix::identity(d));
        std::vector<ComplexMatrix> blocks;
        blocks.reserve(d);
        for (const auto& b : family.blocks()) blocks.push_back(c * b);
        return InteractionUnitary::from_blocks(std::move(blocks));
    }

    // Projection search: alternate exact pair fixes V_j <- V_i P(V_i^dag V_j
    // with its diagonal removed) with polar re-unitarization, sweeping all
    // ordered pairs until the defect converges.
    constexpr double kDefectTol = 1e-8;
    constexpr std::size_t kMaxSweeps = 10000;

    std::vector<ComplexMatrix> blocks;
    blocks.reserve(d);
    for (std::size_t i = 0; i < d; ++i) blocks.push_back(random_unitary(d, rng));

    for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                if (i == j) continue;
                const ComplexMatrix m = zero_diagonal(blocks[i].dagger() * blocks[j]);
                try {
                    blocks[j] = blocks[i] * polar_unitary(m);
                } catch (const NumericalError&) {
                    blocks[j] = random_unitary(d, rng);  // rare stall, restart the block
                }
            }
        }
        if (family_defect(blocks) <= kDefectTol) {
            return InteractionUnitary::from_blocks(std::move(blocks));
        }
    }
    throw NumericalError("no family found (final defect " + std::to_string(family_defect(blocks)) + ")");
}

}  // namespace holevo
