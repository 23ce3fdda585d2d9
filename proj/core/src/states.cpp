#include "holevo/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holevo/errors.hpp"

namespace holevo {

void check_probability_vector(const std::vector<double>& p, double tol) {
    if (p.empty()) throw ValidationError("empty probability vector");
    double sum = 0.0;
    for (double v : p) {
        if (!std::isfinite(v)) throw ValidationError("non-finite probability");
        if (v < 0.0) throw ValidationError("negative probability");
        sum += v;
    }
    if (std::abs(sum - 1.0) > tol) throw ValidationError("probabilities do not sum to 1");
}

PureState::PureState(std::vector<Complex> amplitudes, double tol) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw ValidationError("empty state vector");
    double norm_sq = 0.0;
    for (const Complex& c : amplitudes_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw ValidationError("non-finite amplitude");
        }
        norm_sq += std::norm(c);
    }
    if (std::abs(norm_sq - 1.0) > tol) throw ValidationError("state vector is not normalized");
}

std::vector<double> PureState::probabilities() const {
    std::vector<double> p(dim());
    for (std::size_t i = 0; i < dim(); ++i) p[i] = std::norm(amplitudes_[i]);
    return p;
}

ComplexMatrix PureState::projector() const {
    ComplexMatrix out(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) out(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
    return out;
}

PureState pure_state_from_probabilities(const std::vector<double>& probs,
                                        const std::vector<double>& phases, double tol) {
    if (probs.size() != phases.size()) throw ValidationError("probs/phases length mismatch");
    check_probability_vector(probs, tol);
    std::vector<Complex> amps(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        amps[i] = std::sqrt(probs[i]) * Complex{std::cos(phases[i]), std::sin(phases[i])};
    }
    // Renormalize the rounding residue so the PureState invariant holds exactly.
    double norm = 0.0;
    for (const Complex& c : amps) norm += std::norm(c);
    norm = std::sqrt(norm);
    for (Complex& c : amps) c /= norm;
    return PureState(std::move(amps), tol);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, double tol) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square()) throw ValidationError("density matrix must be square");
    if (!matrix_.all_finite()) throw ValidationError("density matrix has non-finite entries");
    if (hermiticity_defect(matrix_) > tol) throw NumericalError("density matrix not hermitian");
    if (std::abs(matrix_.trace() - Complex{1.0, 0.0}) > tol) {
        throw NumericalError("density matrix trace is not 1");
    }
    const auto eig = hermitian_eigendecomposition(matrix_, tol);
    for (double lambda : eig.eigenvalues) {
        if (lambda < -std::max(tol, 1e-10)) throw NumericalError("density matrix not positive");
    }
}

DensityMatrix pure_density(const PureState& psi) { return DensityMatrix(psi.projector()); }

DensityMatrix density_from_eigensystem(const std::vector<double>& eigenvalues,
                                       const ComplexMatrix& basis, double tol) {
    check_probability_vector(eigenvalues, tol);
    if (!basis.is_square() || basis.rows() != eigenvalues.size()) {
        throw ValidationError("basis shape does not match spectrum");
    }
    if (unitarity_defect(basis) > tol) throw NumericalError("basis not unitary");
    return DensityMatrix(from_eigensystem(eigenvalues, basis), std::max(tol, 1e-10));
}

Ensemble::Ensemble(std::vector<EnsembleEntry> entries, double tol) : entries_(std::move(entries)) {
    if (entries_.empty()) throw ValidationError("empty ensemble");
    const std::size_t d = entries_.front().state.dim();
    double sum = 0.0;
    for (auto& e : entries_) {
        if (e.state.dim() != d) throw ValidationError("ensemble states have mixed dimensions");
        if (!std::isfinite(e.probability) || e.probability < 0.0) {
            throw ValidationError("negative probability");
        }
        if (e.probability < 1e-12) e.probability = 0.0;  // keep the entry, indices stay aligned
        sum += e.probability;
    }
    if (std::abs(sum - 1.0) > tol) throw ValidationError("probabilities do not sum to 1");
}

std::vector<double> Ensemble::probabilities() const {
    std::vector<double> p(size());
    for (std::size_t x = 0; x < size(); ++x) p[x] = entries_[x].probability;
    return p;
}

ComplexMatrix Ensemble::average() const {
    ComplexMatrix avg(dim(), dim());
    for (const auto& e : entries_) avg += Complex{e.probability, 0.0} * e.state.matrix();
    return avg;
}

double Ensemble::max_pairwise_commutator() const {
    double m = 0.0;
    for (std::size_t x = 0; x < size(); ++x)
        for (std::size_t y = x + 1; y < size(); ++y)
            m = std::max(m, commutator_norm(entries_[x].state.matrix(), entries_[y].state.matrix()));
    return m;
}

PovmValidation validate_povm(const std::vector<ComplexMatrix>& elements) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    PovmValidation report;
    report.completeness_defect = kInf;
    if (elements.empty()) return report;
    const std::size_t d = elements.front().rows();
    ComplexMatrix sum(d, d);
    for (const auto& e : elements) {
        if (!e.is_square() || e.rows() != d || !e.all_finite()) {
            report.hermiticity_defects.push_back(kInf);
            report.positivity_defects.push_back(kInf);
            continue;
        }
        const double herm = hermiticity_defect(e);
        report.hermiticity_defects.push_back(herm);
        if (herm <= 1e-6) {
            const auto eig = hermitian_eigendecomposition(e, 1e-6);
            report.positivity_defects.push_back(std::max(0.0, -eig.eigenvalues.back()));
        } else {
            report.positivity_defects.push_back(kInf);
        }
        sum += e;
    }
    if (std::all_of(elements.begin(), elements.end(),
                    [&](const ComplexMatrix& e) { return e.is_square() && e.rows() == d; })) {
        report.completeness_defect = max_abs_diff(sum, ComplexMatrix::identity(d));
    }
    return report;
}

bool PovmValidation::valid(double tol) const {
    if (!(completeness_defect <= tol)) return false;
    auto within = [tol](double v) { return v <= tol; };
    return std::all_of(hermiticity_defects.begin(), hermiticity_defects.end(), within) &&
           std::all_of(positivity_defects.begin(), positivity_defects.end(), within);
}

POVM::POVM(std::vector<ComplexMatrix> elements, double tol) : elements_(std::move(elements)) {
    if (elements_.empty()) throw ValidationError("empty POVM");
    const auto report = validate_povm(elements_);
    if (!report.valid(tol)) throw ValidationError("invalid POVM");
}

POVM projective_povm(const ComplexMatrix& basis, double tol) {
    if (!basis.is_square()) throw ValidationError("projective POVM needs a square basis");
    if (unitarity_defect(basis) > tol) throw NumericalError("basis not unitary");
    const std::size_t d = basis.rows();
    std::vector<ComplexMatrix> elements;
    elements.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        ComplexMatrix p(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) p(i, j) = basis(i, k) * std::conj(basis(j, k));
        elements.push_back(std::move(p));
    }
    // Columns of a unitary give exactly positive, complete projectors; the
    // loose tolerance only absorbs rounding.
    return POVM(std::move(elements), std::max(tol, 1e-8));
}

}  // namespace holevo
