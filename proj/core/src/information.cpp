#include "holevo/information.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "holevo/errors.hpp"
#include "holevo/hermitian_eig.hpp"
#include "holevo/random_gen.hpp"

namespace holevo {

namespace {

// Entropy in bits from a spectrum; lambda in [-1e-10, 0) is treated as the
// rounding shadow of 0, anything more negative is a real defect.
double entropy_from_spectrum(const std::vector<double>& lambdas) {
    double s = 0.0;
    for (double l : lambdas) {
        if (l < -1e-10) throw NumericalError("negative eigenvalue in spectrum");
        if (l <= 0.0) continue;
        s -= l * std::log2(l);
    }
    return s;
}

double entropy_of_matrix(const ComplexMatrix& rho) {
    return entropy_from_spectrum(hermitian_eigendecomposition(rho, 1e-8).eigenvalues);
}

double clamp_probability(double p) {
    if (p < 0.0) {
        if (p < -1e-12) throw NumericalError("negative outcome probability");
        return 0.0;
    }
    return p;
}

// Mutual information of a projective measurement given by basis columns;
// the search hot path, so it avoids building POVM objects per candidate.
double mi_projective(const Ensemble& e, const ComplexMatrix& basis) {
    const std::size_t d = e.dim();
    const std::size_t n = e.size();
    const auto px = e.probabilities();

    std::vector<double> joint(n * d, 0.0);
    std::vector<double> py(d, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        if (px[x] == 0.0) continue;
        const ComplexMatrix& rho = e[x].state.matrix();
        for (std::size_t y = 0; y < d; ++y) {
            Complex v{0.0, 0.0};
            for (std::size_t a = 0; a < d; ++a) {
                Complex row{0.0, 0.0};
                for (std::size_t b = 0; b < d; ++b) row += rho(a, b) * basis(b, y);
                v += std::conj(basis(a, y)) * row;
            }
            const double p = px[x] * clamp_probability(v.real());
            joint[x * d + y] = p;
            py[y] += p;
        }
    }
    double info = 0.0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            const double p = joint[x * d + y];
            if (p > 0.0) info += p * std::log2(p / (px[x] * py[y]));
        }
    return info;
}

// In-place two-column rotation: mixes columns a and b of the basis by the
// unitary [[cos t, e^{i phi} sin t], [-e^{-i phi} sin t, cos t]].
void rotate_columns(ComplexMatrix& basis, std::size_t a, std::size_t b, double theta, double phi) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex ph{std::cos(phi), std::sin(phi)};
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        const Complex va = basis(i, a);
        const Complex vb = basis(i, b);
        basis(i, a) = c * va - std::conj(ph) * s * vb;
        basis(i, b) = ph * s * va + c * vb;
    }
}

// Greedy coordinate ascent over two-column rotations with a shrinking
// angular step. Returns the attained mutual information.
double ascend_basis(const Ensemble& e, ComplexMatrix& basis) {
    const std::size_t d = basis.rows();
    double current = mi_projective(e, basis);
    if (d < 2) return current;

    constexpr double kPhis[4] = {0.0, std::numbers::pi / 2, std::numbers::pi, 3 * std::numbers::pi / 2};
    double step = 0.5;
    while (step > 1e-5) {
        bool improved = false;
        for (std::size_t a = 0; a + 1 < d; ++a) {
            for (std::size_t b = a + 1; b < d; ++b) {
                for (double sign : {1.0, -1.0}) {
                    for (double phi : kPhis) {
                        ComplexMatrix trial = basis;
                        rotate_columns(trial, a, b, sign * step, phi);
                        const double v = mi_projective(e, trial);
                        if (v > current + 1e-15) {
                            basis = std::move(trial);
                            current = v;
                            improved = true;
                        }
                    }
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return current;
}

}  // namespace

double shannon_entropy(const std::vector<double>& p, double tol) {
    check_probability_vector(p, tol);
    return entropy_from_spectrum(p);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return entropy_from_spectrum(rho.eigensystem().eigenvalues);
}

double holevo_chi(const Ensemble& e) {
    double chi = entropy_of_matrix(e.average());
    for (const auto& entry : e.entries()) {
        if (entry.probability == 0.0) continue;
        chi -= entry.probability * von_neumann_entropy(entry.state);
    }
    return chi;
}

double mutual_information(const Ensemble& e, const POVM& m) {
    if (e.dim() != m.dim()) throw ValidationError("ensemble/POVM dimension mismatch");
    const auto px = e.probabilities();
    const std::size_t n = e.size();
    const std::size_t k = m.size();

    std::vector<double> joint(n * k, 0.0);
    std::vector<double> py(k, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        if (px[x] == 0.0) continue;
        for (std::size_t y = 0; y < k; ++y) {
            const double p = px[x] * clamp_probability((m[y] * e[x].state.matrix()).trace().real());
            joint[x * k + y] = p;
            py[y] += p;
        }
    }
    double info = 0.0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            const double p = joint[x * k + y];
            if (p > 0.0) info += p * std::log2(p / (px[x] * py[y]));
        }
    return info;
}

BoundCertificate certify_bound(const Ensemble& e, const POVM& m, double tol) {
    BoundCertificate cert{};
    cert.chi_bits = holevo_chi(e);
    cert.mutual_information_bits = mutual_information(e, m);
    cert.slack_bits = cert.chi_bits - cert.mutual_information_bits;
    cert.max_pairwise_commutator = e.max_pairwise_commutator();
    cert.saturated = cert.slack_bits <= tol;
    return cert;
}

POVM common_eigenbasis_povm(const Ensemble& e, double tol) {
    if (e.max_pairwise_commutator() > tol) throw ValidationError("ensemble does not commute");
    // Distinct perturbation weights split degeneracies of the average that
    // individual states do not share, so the eigenbasis diagonalizes all of
    // them at once.
    ComplexMatrix m = e.average();
    for (std::size_t x = 0; x < e.size(); ++x) {
        m += Complex{static_cast<double>(x) * 1e-7, 0.0} * e[x].state.matrix();
    }
    const auto eig = hermitian_eigendecomposition(m, 1e-8);
    return projective_povm(eig.eigenvectors, 1e-8);
}

SearchResult accessible_information_search(const Ensemble& e, std::size_t restarts, std::uint64_t seed) {
    const std::size_t d = e.dim();
    const Rng master(seed);

    ComplexMatrix best_basis = ComplexMatrix::identity(d);
    double best_info = -1.0;
    auto consider = [&](ComplexMatrix basis) {
        const double v = ascend_basis(e, basis);
        if (v > best_info) {
            best_info = v;
            best_basis = std::move(basis);
        }
    };

    // Deterministic candidates first: the computational basis, the average
    // state's eigenbasis, and (when the ensemble commutes) the exact
    // simultaneous eigenbasis, which realizes the bound.
    consider(ComplexMatrix::identity(d));
    consider(hermitian_eigendecomposition(e.average(), 1e-8).eigenvectors);
    if (e.max_pairwise_commutator() <= 1e-8) {
        ComplexMatrix m = e.average();
        for (std::size_t x = 0; x < e.size(); ++x) {
            m += Complex{static_cast<double>(x) * 1e-7, 0.0} * e[x].state.matrix();
        }
        consider(hermitian_eigendecomposition(m, 1e-8).eigenvectors);
    }

    for (std::size_t r = 0; r < restarts; ++r) {
        Rng rng = master.fork(r);
        consider(random_unitary(d, rng));
    }

    return SearchResult{projective_povm(best_basis, 1e-8), best_info};
}

}  // namespace holevo
