#include "holevo/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "holevo/errors.hpp"

namespace holevo {

namespace {

// One complex Jacobi rotation J in the (p,q) plane:
//   J_pp = c, J_pq = s*e^{i phi}, J_qp = -s*e^{-i phi}, J_qq = c
// chosen so that (J^dagger A J)_pq = 0 for the current a_pq = |g| e^{i phi}.
struct Rotation {
    double c;
    double s;
    Complex phase;  // e^{i phi}
};

Rotation make_rotation(double app, double aqq, Complex apq) {
    const double g = std::abs(apq);
    const Complex phase = apq / g;
    const double tau = (aqq - app) / (2.0 * g);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return Rotation{c, t * c, phase};
}

void apply_rotation(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q, const Rotation& r) {
    const std::size_t n = a.rows();
    const Complex sp = r.s * r.phase;        // s e^{i phi}
    const Complex spc = r.s * std::conj(r.phase);

    // A <- J^dagger A (rows p, q)
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = r.c * apk - sp * aqk;
        a(q, k) = spc * apk + r.c * aqk;
    }
    // A <- A J and V <- V J (columns p, q)
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = r.c * akp - spc * akq;
        a(k, q) = sp * akp + r.c * akq;

        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = r.c * vkp - spc * vkq;
        v(k, q) = sp * vkp + r.c * vkq;
    }
}

double max_offdiag(const ComplexMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

}  // namespace

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& m, double hermitian_tol) {
    if (!m.is_square()) throw ValidationError("eigendecomposition needs a square matrix");
    if (!m.all_finite()) throw ValidationError("matrix has non-finite entries");
    if (hermiticity_defect(m) > hermitian_tol) throw NumericalError("not hermitian");

    const std::size_t n = m.rows();

    // Work on the symmetrized copy so the sub-tolerance asymmetry cannot
    // leak into the spectrum.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, a.max_abs());
    const double stop = 1e-15 * scale;
    const std::size_t max_sweeps = 100;

    for (std::size_t sweep = 0; sweep < max_sweeps && max_offdiag(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= stop) continue;
                const Rotation r = make_rotation(a(p, p).real(), a(q, q).real(), a(p, q));
                apply_rotation(a, v, p, q, r);
            }
        }
    }
    if (max_offdiag(a) > 1e-11 * scale) {
        throw NumericalError("jacobi eigensolver did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix from_eigensystem(const std::vector<double>& eigenvalues, const ComplexMatrix& eigenvectors) {
    if (!eigenvectors.is_square() || eigenvectors.rows() != eigenvalues.size()) {
        throw ValidationError("eigensystem shape mismatch");
    }
    const std::size_t n = eigenvalues.size();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = eigenvectors(i, k) * eigenvalues[k];
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eigenvectors(j, k));
        }
    }
    return out;
}

}  // namespace holevo
