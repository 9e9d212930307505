#ifndef STARKIT_STAR_ALGEBRA_HPP
#define STARKIT_STAR_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "starkit/numkit.hpp"

namespace starkit {

// A *-closed subspace of n x n matrices, carried by a Hilbert-Schmidt
// orthonormal basis.
struct StarAlgebra {
    std::size_t ambient_dim = 0;
    std::vector<ComplexMatrix> basis;

    std::size_t dim() const { return basis.size(); }
};

// Linear functional given by its values on the algebra basis.
struct State {
    std::vector<cplx> values;
};

// Finite-dimensional GNS representation: images of the algebra basis under
// pi, acting on a space of dimension space_dim, with cyclic vector Omega.
struct Representation {
    std::size_t space_dim = 0;
    std::vector<ComplexMatrix> images;
    std::vector<cplx> cyclic_vector;
};

// Smallest subspace containing the generators that is closed under product
// and adjoint. Grows the orthonormal span by pairwise products until a full
// pass adds nothing; throws ClosureOverflowError past dimension n^2.
StarAlgebra generate(const std::vector<ComplexMatrix>& generators, double tol = kDefaultTol);

// Coefficients of the orthogonal projection of `a` onto span(basis).
std::vector<cplx> coefficients(const StarAlgebra& alg, const ComplexMatrix& a);

// Membership up to residual tol * max(1, ||a||).
bool contains(const StarAlgebra& alg, const ComplexMatrix& a, double tol = kDefaultTol);

// Multiplicative unit of the algebra: the orthogonal projection onto the
// joint range of the basis, verified to act as a two-sided identity.
ComplexMatrix unit(const StarAlgebra& alg, double tol = kDefaultTol);

// phi evaluated on an algebra element (via its basis coefficients).
cplx evaluate(const StarAlgebra& alg, const State& phi, const ComplexMatrix& x);

// State induced by a density-like matrix: phi(X) = trace(d * X).
State trace_state(const StarAlgebra& alg, const ComplexMatrix& d);

// Gelfand-Naimark-Segal construction from a positive state: Gram form
// phi(b* a) on the algebra, quotient by its null space, left-multiplication
// action, cyclic vector the class of the unit.
Representation gns(const StarAlgebra& alg, const State& phi, double tol = kDefaultTol);

// Image of an arbitrary algebra element under the representation.
ComplexMatrix represent(const StarAlgebra& alg, const Representation& rep, const ComplexMatrix& x);

}  // namespace starkit

#endif
