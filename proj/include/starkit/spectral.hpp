#ifndef STARKIT_SPECTRAL_HPP
#define STARKIT_SPECTRAL_HPP

#include <utility>
#include <vector>

#include "starkit/star_algebra.hpp"

namespace starkit {

inline constexpr double kDefaultClusterTol = 1e-7;

// Finite spectral resolution of a Hermitian matrix: distinct nonzero
// eigenvalue clusters (descending by absolute value) with their orthogonal
// spectral projections, plus the projection onto the zero eigenspace.
struct SpectralDecomposition {
    std::vector<double> lambdas;
    std::vector<ComplexMatrix> projections;
    ComplexMatrix kernel_projection;

    std::size_t cluster_count() const { return lambdas.size(); }
    // Cluster count including the zero cluster when present.
    std::size_t spectrum_size(double tol = kDefaultTol) const;
};

// Cluster the eigenvalues of `a` at gap cluster_tol * max(1, ||a||); each
// lambda is its cluster mean, each projection the projector onto the
// cluster's eigenvector span. The zero matrix yields an empty decomposition
// with kernel_projection = identity.
SpectralDecomposition spectral_decompose(const ComplexMatrix& a,
                                         double cluster_tol = kDefaultClusterTol);

// Spectral projector via the Lagrange node-product formula
// P_j = A * L_j(A) / lambda_j with L_j the degree d-1 polynomial that is 1
// at lambda_j and 0 at the other cluster values. j is zero-based.
ComplexMatrix lagrange_projector(const ComplexMatrix& a, const SpectralDecomposition& dec,
                                 std::size_t j);

// Desk-scale Gelfand identity for self-adjoint a:
// dim C*(a, I) versus the number of eigenvalue clusters (zero included).
struct DimensionIdentity {
    std::size_t dim_with_unit = 0;
    std::size_t spectrum_size = 0;
};
DimensionIdentity cstar_dimension_identity(const ComplexMatrix& a, double tol = kDefaultTol);

// From a strictly increasing projection chain P_1 < P_2 < ... builds
// sum_k (1/k) (P_{k+1} - P_k); its spectrum is the harmonic set {1/k}
// cut off at the chain length.
ComplexMatrix chain_element(const std::vector<ComplexMatrix>& chain, double tol = kDefaultTol);

}  // namespace starkit

#endif
