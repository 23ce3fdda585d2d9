#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace holevo {

using Complex = std::complex<double>;

// Dense complex matrix, row-major storage, value semantics.
// Sizes here are desk-scale (dimensions up to ~64); nothing is tuned
// beyond cache-friendly loops.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);
    // Row-wise construction, mostly for tests and small fixed gates.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static ComplexMatrix diagonal(const std::vector<double>& entries);
    static ComplexMatrix diagonal(const std::vector<Complex>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_ && rows_ > 0; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }

    ComplexMatrix dagger() const;
    Complex trace() const;

    // max-norm: max_{ij} |a_ij|
    double max_abs() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) { return lhs *= scalar; }
    friend ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) { return rhs *= scalar; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

// Entrywise distance in max-norm; matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product with the system factor first: joint index i*cols(b)+k
// addresses |i>_sys |k>_app.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Trace out the leading (system) factor of a (d_sys*d_app) square matrix:
// out[k,l] = sum_i joint[(i,k),(i,l)].
ComplexMatrix partial_trace_system(const ComplexMatrix& joint, std::size_t d_sys, std::size_t d_app);

// max-norm of AB - BA.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

// max-norm of M - M^dagger.
double hermiticity_defect(const ComplexMatrix& m);

// max-norm of M^dagger M - I.
double unitarity_defect(const ComplexMatrix& m);

bool is_unitary(const ComplexMatrix& m, double tol = 1e-10);

}  // namespace holevo
