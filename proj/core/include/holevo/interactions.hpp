#pragma once

#include <cstdint>
#include <vector>

#include "holevo/complex_matrix.hpp"
#include "holevo/states.hpp"

namespace holevo {

// Controlled-block measurement interaction U = sum_i |i><i| (x) V_i: when
// the system is in level i the apparatus evolves under the unitary block
// V_i. The full matrix is block-diagonal in the system (x) apparatus
// ordering.
class InteractionUnitary {
public:
    // Validates that every block is unitary within `tol`.
    static InteractionUnitary from_blocks(std::vector<ComplexMatrix> blocks, double tol = 1e-10);

    std::size_t d_sys() const { return blocks_.size(); }
    std::size_t d_app() const { return blocks_.front().rows(); }
    const std::vector<ComplexMatrix>& blocks() const { return blocks_; }
    const ComplexMatrix& block(std::size_t i) const { return blocks_[i]; }

    ComplexMatrix full_matrix() const;  // diag(V_0, ..., V_{d_sys-1})
    double max_block_unitarity_defect() const;

private:
    explicit InteractionUnitary(std::vector<ComplexMatrix> blocks) : blocks_(std::move(blocks)) {}
    std::vector<ComplexMatrix> blocks_;
};

struct ConditionReport {
    double unitarity_defect;    // max over blocks of ||V^dag V - I||_max
    double von_neumann_defect;  // max over i != j, k of |<r_k^i | r_k^j>|
    bool controlled_form;
};

// Qudit shift gate: block V_i cyclically shifts the apparatus basis
// {|r_k>} (the columns of apparatus_basis) by i, V_i = B S^i B^dagger.
// With the identity basis and d = 2 this is exactly CNOT.
InteractionUnitary shift_gate(std::size_t d, const ComplexMatrix& apparatus_basis);
InteractionUnitary shift_gate(std::size_t d);  // computational apparatus basis

// Shift family decorated with per-level phases: V_i = B Phi_i S^i B^dagger,
// Phi_i = diag(e^{i phases[i][k]}). Satisfies the pointer-orthogonality
// condition exactly for any phase choice.
InteractionUnitary phase_shift_family(std::size_t d, const std::vector<std::vector<double>>& phases,
                                      const ComplexMatrix& apparatus_basis);

// Evaluates the pointer states |r_k^i> = V_i |r_k> in the eigenbasis of
// rho_apparatus and reports how far they are from mutually orthogonal
// across system levels.
ConditionReport check_conditions(const InteractionUnitary& u, const DensityMatrix& rho_apparatus);

enum class FamilySearchMethod { kPhaseShift, kProjectionSearch };

// Draws an interaction whose pointer-orthogonality defect (measured in the
// computational apparatus basis) is <= 1e-8. kPhaseShift draws random
// phases for the exact construction above; kProjectionSearch starts from
// random unitary blocks and alternates diagonal-zeroing with polar
// re-unitarization until the defect converges. Deterministic per seed.
InteractionUnitary random_von_neumann_family(std::size_t d, std::uint64_t seed, FamilySearchMethod method);

}  // namespace holevo
