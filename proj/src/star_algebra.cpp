#include "starkit/star_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace starkit {

namespace {

// Residual of `x` after two projection passes onto the orthonormal family.
ComplexMatrix project_out(const std::vector<ComplexMatrix>& basis, ComplexMatrix x) {
    for (int pass = 0; pass < 2; ++pass)
        for (const ComplexMatrix& b : basis) x -= hs_inner(x, b) * b;
    return x;
}

}  // namespace

StarAlgebra generate(const std::vector<ComplexMatrix>& generators, double tol) {
    if (generators.empty()) throw ShapeError("generate: empty generator list");
    const ComplexMatrix& first = generators.front();
    if (!first.is_square()) throw ShapeError("generate: generators must be square");
    for (const ComplexMatrix& g : generators)
        if (!g.same_shape(first)) throw ShapeError("generate: generator shape mismatch");

    const std::size_t n = first.rows();
    const std::size_t max_dim = n * n;

    std::vector<ComplexMatrix> seed;
    seed.reserve(2 * generators.size());
    for (const ComplexMatrix& g : generators) {
        seed.push_back(g);
        seed.push_back(g.adjoint());
    }

    StarAlgebra alg;
    alg.ambient_dim = n;
    alg.basis = orthonormalize(seed, tol);

    bool added = true;
    std::size_t passes = 0;
    while (added) {
        if (++passes > max_dim + 1)
            throw ClosureOverflowError("generate: closure failed to stabilize");
        added = false;
        const std::size_t frozen = alg.basis.size();
        for (std::size_t i = 0; i < frozen; ++i) {
            for (std::size_t j = 0; j < frozen; ++j) {
                const ComplexMatrix prod = alg.basis[i] * alg.basis[j];
                ComplexMatrix res = project_out(alg.basis, prod);
                const double norm = res.hs_norm();
                if (norm <= tol * std::max(1.0, prod.hs_norm())) continue;
                if (alg.basis.size() + 1 > max_dim)
                    throw ClosureOverflowError("generate: dimension exceeded n^2");
                res *= cplx{1.0 / norm, 0.0};
                alg.basis.push_back(std::move(res));
                added = true;
            }
        }
    }
    return alg;
}

std::vector<cplx> coefficients(const StarAlgebra& alg, const ComplexMatrix& a) {
    std::vector<cplx> coeffs(alg.basis.size());
    for (std::size_t i = 0; i < alg.basis.size(); ++i) coeffs[i] = hs_inner(a, alg.basis[i]);
    return coeffs;
}

bool contains(const StarAlgebra& alg, const ComplexMatrix& a, double tol) {
    if (a.rows() != alg.ambient_dim || a.cols() != alg.ambient_dim)
        throw ShapeError("contains: shape does not match ambient dimension");
    const ComplexMatrix res = project_out(alg.basis, a);
    return res.hs_norm() <= tol * std::max(1.0, a.hs_norm());
}

ComplexMatrix unit(const StarAlgebra& alg, double tol) {
    const std::size_t n = alg.ambient_dim;
    // The joint range of a *-closed family is the range of sum B_i B_i^*;
    // the unit is the orthogonal projection onto it.
    ComplexMatrix gram(n, n);
    for (const ComplexMatrix& b : alg.basis) gram += b * b.adjoint();

    const EigenResult eig = hermitian_eig(gram, std::max(tol, 1e-9));
    const double top = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
    ComplexMatrix e(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (eig.eigenvalues[k] <= tol * std::max(1.0, top)) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                e(i, j) += eig.basis(i, k) * std::conj(eig.basis(j, k));
    }

    const double check_tol = std::max(tol, 1e-10);
    for (const ComplexMatrix& b : alg.basis) {
        const double scale = std::max(1.0, b.hs_norm());
        if ((e * b - b).hs_norm() > check_tol * scale || (b * e - b).hs_norm() > check_tol * scale)
            throw StructuralError("unit: candidate fails to act as a two-sided identity");
    }
    return e;
}

cplx evaluate(const StarAlgebra& alg, const State& phi, const ComplexMatrix& x) {
    if (phi.values.size() != alg.basis.size())
        throw ShapeError("evaluate: state length does not match basis");
    const std::vector<cplx> coeffs = coefficients(alg, x);
    cplx out{0.0, 0.0};
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += coeffs[i] * phi.values[i];
    return out;
}

State trace_state(const StarAlgebra& alg, const ComplexMatrix& d) {
    State phi;
    phi.values.reserve(alg.basis.size());
    for (const ComplexMatrix& b : alg.basis) phi.values.push_back((d * b).trace());
    return phi;
}

Representation gns(const StarAlgebra& alg, const State& phi, double tol) {
    if (phi.values.size() != alg.basis.size())
        throw ShapeError("gns: state length does not match basis");
    const std::size_t m = alg.basis.size();

    const ComplexMatrix e = unit(alg, tol);
    if (!contains(alg, e, std::max(tol, 1e-8)))
        throw StructuralError("gns: unit does not lie in the algebra span");

    // Gram form of the state: G(j, i) = phi(B_j^* B_i).
    ComplexMatrix gram(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        const ComplexMatrix bj_adj = alg.basis[j].adjoint();
        for (std::size_t i = 0; i < m; ++i)
            gram(j, i) = evaluate(alg, phi, bj_adj * alg.basis[i]);
    }
    gram = 0.5 * (gram + gram.adjoint());

    const EigenResult eig = hermitian_eig(gram, std::max(tol, 1e-8));
    const double top = eig.eigenvalues.empty() ? 0.0 : std::max(eig.eigenvalues.back(), 0.0);
    if (!eig.eigenvalues.empty() && eig.eigenvalues.front() < -tol * std::max(1.0, top))
        throw PreconditionError("gns: state is not positive (negative Gram eigenvalue)");

    // Orthonormal basis of the quotient space, expressed in algebra
    // coefficients: e_k = w_k / sqrt(mu_k) for surviving eigenvalues.
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < m; ++k)
        if (eig.eigenvalues[k] > tol * std::max(1.0, top)) keep.push_back(k);
    const std::size_t r = keep.size();

    ComplexMatrix qbasis(m, r);  // columns e_k
    for (std::size_t c = 0; c < r; ++c) {
        const double scale = 1.0 / std::sqrt(eig.eigenvalues[keep[c]]);
        for (std::size_t i = 0; i < m; ++i) qbasis(i, c) = eig.basis(i, keep[c]) * scale;
    }
    const ComplexMatrix qdual = qbasis.adjoint() * gram;  // rows e_k^* G

    Representation rep;
    rep.space_dim = r;
    rep.images.reserve(m);
    for (std::size_t t = 0; t < m; ++t) {
        // Left multiplication by B_t in algebra coefficients.
        ComplexMatrix left(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            const std::vector<cplx> col = coefficients(alg, alg.basis[t] * alg.basis[i]);
            for (std::size_t row = 0; row < m; ++row) left(row, i) = col[row];
        }
        rep.images.push_back(qdual * left * qbasis);
    }

    const std::vector<cplx> unit_coeffs = coefficients(alg, e);
    ComplexMatrix u(m, 1);
    for (std::size_t i = 0; i < m; ++i) u(i, 0) = unit_coeffs[i];
    const ComplexMatrix omega = qdual * u;
    rep.cyclic_vector.resize(r);
    for (std::size_t k = 0; k < r; ++k) rep.cyclic_vector[k] = omega(k, 0);
    return rep;
}

ComplexMatrix represent(const StarAlgebra& alg, const Representation& rep, const ComplexMatrix& x) {
    const std::vector<cplx> coeffs = coefficients(alg, x);
    ComplexMatrix out(rep.space_dim, rep.space_dim);
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += coeffs[i] * rep.images[i];
    return out;
}

}  // namespace starkit
