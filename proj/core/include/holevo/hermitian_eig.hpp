#pragma once

#include <vector>

#include "holevo/complex_matrix.hpp"

namespace holevo {

// Spectral data of a Hermitian matrix. Eigenvalues are real and sorted
// descending; eigenvector k is the k-th column of `eigenvectors`.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Cyclic Jacobi diagonalization of a Hermitian matrix. The input must be
// Hermitian within `hermitian_tol` in max-norm, otherwise NumericalError
// ("not hermitian") is thrown. Adequate and simple at desk-scale
// dimensions; accuracy is near machine precision.
EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& m, double hermitian_tol = 1e-10);

// V diag(lambda) V^dagger; the inverse of the decomposition above.
ComplexMatrix from_eigensystem(const std::vector<double>& eigenvalues, const ComplexMatrix& eigenvectors);

}  // namespace holevo
