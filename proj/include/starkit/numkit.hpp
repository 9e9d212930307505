#ifndef STARKIT_NUMKIT_HPP
#define STARKIT_NUMKIT_HPP

#include <utility>
#include <vector>

#include "starkit/complex_matrix.hpp"

namespace starkit {

// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
// order, columns of `basis` the matching orthonormal eigenvectors.
struct EigenResult {
    std::vector<double> eigenvalues;
    ComplexMatrix basis;
};

// Cyclic complex Jacobi rotations; terminates when the off-diagonal
// Hilbert-Schmidt mass drops below 1e-14 * ||A|| or after 50 sweeps.
// Eigenvector phases are fixed by making the first nonzero component
// real positive.
EigenResult hermitian_eig(const ComplexMatrix& a, double tol = kDefaultTol);

struct PolarDecomposition {
    ComplexMatrix u;  // partial isometry, vanishes on ker(A)
    ComplexMatrix p;  // PSD factor with p^2 = adjoint(A) * A
};

// A = U * P with P = (A*A)^{1/2} and U = A * pinv(P); U* U is the
// orthogonal projection onto range(P).
PolarDecomposition polar(const ComplexMatrix& a, double tol = kDefaultTol);

// Hilbert-Schmidt orthonormalization of a matrix family (modified
// Gram-Schmidt with one re-orthogonalization pass). Members whose
// post-projection norm falls below tol are dropped.
std::vector<ComplexMatrix> orthonormalize(const std::vector<ComplexMatrix>& family,
                                          double tol = kDefaultTol);

}  // namespace starkit

#endif
