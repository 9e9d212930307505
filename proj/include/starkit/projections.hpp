#ifndef STARKIT_PROJECTIONS_HPP
#define STARKIT_PROJECTIONS_HPP

#include <cstdint>
#include <vector>

#include "starkit/star_algebra.hpp"

namespace starkit {

// Pairwise orthogonal projections summing to a parent projection.
struct ProjectionFamily {
    std::vector<ComplexMatrix> members;
    ComplexMatrix parent;
};

// P = P* = P^2 within tol.
bool is_projection(const ComplexMatrix& p, double tol = kDefaultTol);

// Projection order: P <= Q iff PQ = QP = P.
bool leq(const ComplexMatrix& p, const ComplexMatrix& q, double tol = kDefaultTol);

// dim of the corner P * alg * P: rank of the orthonormalized compressed basis.
std::size_t corner_dimension(const StarAlgebra& alg, const ComplexMatrix& p,
                             double tol = kDefaultTol);

// Minimality relative to the algebra: corner dimension 1.
bool is_minimal(const StarAlgebra& alg, const ComplexMatrix& p, double tol = kDefaultTol);

// Split P into pairwise orthogonal minimal projections of the algebra by
// spectral-splitting random self-adjoint corner elements (seeded draws,
// up to 16 retries per split).
ProjectionFamily minimal_decomposition(const StarAlgebra& alg, const ComplexMatrix& p,
                                       std::uint64_t seed, double tol = kDefaultTol);

// minimal_decomposition applied to unit(alg).
ProjectionFamily unit_decomposition(const StarAlgebra& alg, std::uint64_t seed,
                                    double tol = kDefaultTol);

// Numerical rank of a projection (eigenvalues above 1/2), used as the
// multiplicity of minimal projections.
std::size_t projection_rank(const ComplexMatrix& p, double tol = kDefaultTol);

}  // namespace starkit

#endif
