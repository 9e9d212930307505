#ifndef STARKIT_COMPLEX_MATRIX_HPP
#define STARKIT_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "starkit/errors.hpp"

namespace starkit {

using cplx = std::complex<double>;

// Default tolerance for rank and membership decisions.
inline constexpr double kDefaultTol = 1e-9;

// Dense row-major complex matrix, the carrier of every algebra element.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }
    // Elementary matrix e_{ij} (single 1 at row i, column j).
    static ComplexMatrix unit_entry(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_ && rows_ > 0; }
    bool empty() const { return entries_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<cplx>& entries() const { return entries_; }
    std::vector<cplx>& entries() { return entries_; }

    ComplexMatrix adjoint() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);

    // Frobenius / Hilbert-Schmidt norm.
    double hs_norm() const;
    double max_abs() const;
    cplx trace() const;
    bool all_finite() const;

    bool same_shape(const ComplexMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scalar, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx scalar);

// trace(adjoint(b) * a), the Hilbert-Schmidt inner product.
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// ||a - adjoint(a)||_HS, zero iff Hermitian.
double hermitian_defect(const ComplexMatrix& a);

}  // namespace starkit

#endif
