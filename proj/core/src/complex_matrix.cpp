#include "holevo/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "holevo/errors.hpp"

namespace holevo {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw ValidationError("matrix dimensions must be positive");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r > 0 ? rows.begin()->size() : 0;
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw ValidationError("ragged row list");
        std::size_t j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& entries) {
    ComplexMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& entries) {
    ComplexMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw ValidationError("trace of non-square matrix");
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& v) {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("matrix shape mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("matrix shape mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& v : data_) v *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix shape mismatch in *");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("matrix shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix partial_trace_system(const ComplexMatrix& joint, std::size_t d_sys, std::size_t d_app) {
    if (!joint.is_square() || joint.rows() != d_sys * d_app || d_sys == 0 || d_app == 0) {
        throw ValidationError("bad joint dimension");
    }
    ComplexMatrix out(d_app, d_app);
    for (std::size_t k = 0; k < d_app; ++k)
        for (std::size_t l = 0; l < d_app; ++l) {
            Complex s{0.0, 0.0};
            for (std::size_t i = 0; i < d_sys; ++i) s += joint(i * d_app + k, i * d_app + l);
            out(k, l) = s;
        }
    return out;
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw ValidationError("commutator needs equal square dimensions");
    }
    return max_abs_diff(a * b, b * a);
}

double hermiticity_defect(const ComplexMatrix& m) {
    if (!m.is_square()) throw ValidationError("hermiticity check needs a square matrix");
    return max_abs_diff(m, m.dagger());
}

double unitarity_defect(const ComplexMatrix& m) {
    if (!m.is_square()) throw ValidationError("unitarity check needs a square matrix");
    return max_abs_diff(m.dagger() * m, ComplexMatrix::identity(m.rows()));
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    return unitarity_defect(m) <= tol;
}

}  // namespace holevo
