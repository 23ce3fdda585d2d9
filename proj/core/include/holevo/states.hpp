#pragma once

#include <cstddef>
#include <vector>

#include "holevo/complex_matrix.hpp"
#include "holevo/hermitian_eig.hpp"

namespace holevo {

// System pure state psi = sum_i c_i |i>. Construction validates
// normalization; amplitudes are immutable afterwards.
class PureState {
public:
    explicit PureState(std::vector<Complex> amplitudes, double tol = 1e-10);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

    // |c_i|^2 as a probability vector.
    std::vector<double> probabilities() const;
    ComplexMatrix projector() const;  // |psi><psi|

private:
    std::vector<Complex> amplitudes_;
};

// c_i = sqrt(p_i) e^{i phi_i}.
PureState pure_state_from_probabilities(const std::vector<double>& probs,
                                        const std::vector<double>& phases, double tol = 1e-10);

// Mixed state: Hermitian, unit trace, positive semidefinite (within tol).
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix matrix, double tol = 1e-10);

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

    EigenDecomposition eigensystem() const { return hermitian_eigendecomposition(matrix_, 1e-8); }

private:
    ComplexMatrix matrix_;
};

DensityMatrix pure_density(const PureState& psi);

// rho = sum_k r_k v_k v_k^dagger from a spectrum and a unitary basis whose
// columns are the eigenvectors.
DensityMatrix density_from_eigensystem(const std::vector<double>& eigenvalues,
                                       const ComplexMatrix& basis, double tol = 1e-10);

struct EnsembleEntry {
    double probability;
    DensityMatrix state;
};

// {p_x, rho_x}: prior probabilities with density matrices of equal
// dimension. Probabilities below 1e-12 are clamped to zero but the entry is
// kept, so entry indices stay aligned with outcome labels.
class Ensemble {
public:
    explicit Ensemble(std::vector<EnsembleEntry> entries, double tol = 1e-10);

    std::size_t size() const { return entries_.size(); }
    std::size_t dim() const { return entries_.front().state.dim(); }
    const std::vector<EnsembleEntry>& entries() const { return entries_; }
    const EnsembleEntry& operator[](std::size_t x) const { return entries_[x]; }

    std::vector<double> probabilities() const;
    ComplexMatrix average() const;  // sum_x p_x rho_x
    double max_pairwise_commutator() const;

private:
    std::vector<EnsembleEntry> entries_;
};

// Measurement: positive operators summing to identity.
class POVM {
public:
    explicit POVM(std::vector<ComplexMatrix> elements, double tol = 1e-10);

    std::size_t size() const { return elements_.size(); }
    std::size_t dim() const { return elements_.front().rows(); }
    const std::vector<ComplexMatrix>& elements() const { return elements_; }
    const ComplexMatrix& operator[](std::size_t y) const { return elements_[y]; }

private:
    std::vector<ComplexMatrix> elements_;
};

// Rank-1 projectors onto the columns of a unitary.
POVM projective_povm(const ComplexMatrix& basis, double tol = 1e-10);

struct PovmValidation {
    std::vector<double> hermiticity_defects;  // per element: max-norm of E - E^dagger
    std::vector<double> positivity_defects;   // per element: max(0, -lambda_min)
    double completeness_defect;               // max-norm of sum E - I
    bool valid(double tol = 1e-10) const;
};

// Report-style check; never throws on defective input.
PovmValidation validate_povm(const std::vector<ComplexMatrix>& elements);

// Shared validation helper: nonnegative entries summing to 1 within tol.
void check_probability_vector(const std::vector<double>& p, double tol = 1e-10);

}  // namespace holevo
