#include "starkit/complex_matrix.hpp"

#include <cmath>

namespace starkit {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::unit_entry(std::size_t n, std::size_t i, std::size_t j) {
    ComplexMatrix m(n, n);
    m(i, j) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (!same_shape(other)) throw ShapeError("matrix addition: shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (!same_shape(other)) throw ShapeError("matrix subtraction: shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

double ComplexMatrix::hs_norm() const {
    double sum = 0.0;
    for (const auto& e : entries_) sum += std::norm(e);
    return std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t{0.0, 0.0};
    const std::size_t n = std::min(rows_, cols_);
    for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& e : entries_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimension mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(cplx scalar, ComplexMatrix a) {
    a *= scalar;
    return a;
}

ComplexMatrix operator*(ComplexMatrix a, cplx scalar) {
    a *= scalar;
    return a;
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) throw ShapeError("hs_inner: shape mismatch");
    cplx sum{0.0, 0.0};
    const auto& ae = a.entries();
    const auto& be = b.entries();
    for (std::size_t k = 0; k < ae.size(); ++k) sum += std::conj(be[k]) * ae[k];
    return sum;
}

double hermitian_defect(const ComplexMatrix& a) {
    if (!a.is_square()) throw ShapeError("hermitian_defect: matrix not square");
    return (a - a.adjoint()).hs_norm();
}

}  // namespace starkit
