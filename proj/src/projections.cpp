#include "starkit/projections.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "starkit/spectral.hpp"

namespace starkit {

namespace {

// Orthonormal basis of range(P) as the columns of an n x r matrix.
ComplexMatrix range_basis(const ComplexMatrix& p) {
    const EigenResult eig = hermitian_eig(p, 1e-8);
    const std::size_t n = p.rows();
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < n; ++k)
        if (eig.eigenvalues[k] > 0.5) keep.push_back(k);
    ComplexMatrix v(n, keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) v(i, c) = eig.basis(i, keep[c]);
    return v;
}

void decompose_recursive(const StarAlgebra& alg, const ComplexMatrix& p, std::mt19937_64& rng,
                         double tol, std::vector<ComplexMatrix>& out) {
    if (is_minimal(alg, p, tol)) {
        // Newton-polish idempotency before emitting: the map P -> 3P^2 - 2P^3
        // squares the defect and stays inside the algebra.
        ComplexMatrix q = cplx{0.5, 0.0} * (p + p.adjoint());
        for (int it = 0; it < 2; ++it) {
            const ComplexMatrix q2 = q * q;
            q = cplx{3.0, 0.0} * q2 - cplx{2.0, 0.0} * (q2 * q);
        }
        out.push_back(q);
        return;
    }

    // Work in coordinates of range(P) so idempotency errors do not compound
    // across recursion levels.
    const ComplexMatrix v = range_basis(p);
    const ComplexMatrix v_adj = v.adjoint();
    const std::size_t r = v.cols();

    std::vector<ComplexMatrix> corner;
    corner.reserve(alg.basis.size());
    for (const ComplexMatrix& b : alg.basis) corner.push_back(v_adj * b * v);
    corner = orthonormalize(corner, std::max(tol, 1e-8));

    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 16; ++attempt) {
        ComplexMatrix x(r, r);
        for (const ComplexMatrix& c : corner) x += cplx{gauss(rng), 0.0} * c;
        x = 0.5 * (x + x.adjoint());
        if (x.hs_norm() <= tol) continue;

        const SpectralDecomposition dec = spectral_decompose(x);
        std::vector<ComplexMatrix> pieces = dec.projections;
        if (dec.kernel_projection.hs_norm() > 0.5) pieces.push_back(dec.kernel_projection);
        if (pieces.size() < 2) continue;

        for (const ComplexMatrix& q : pieces)
            decompose_recursive(alg, v * q * v_adj, rng, tol, out);
        return;
    }
    throw StructuralError("minimal_decomposition: no strict split after 16 draws");
}

}  // namespace

bool is_projection(const ComplexMatrix& p, double tol) {
    if (!p.is_square()) throw ShapeError("is_projection: matrix not square");
    return (p - p.adjoint()).hs_norm() <= tol && (p * p - p).hs_norm() <= tol;
}

bool leq(const ComplexMatrix& p, const ComplexMatrix& q, double tol) {
    if (!is_projection(p, tol) || !is_projection(q, tol))
        throw PreconditionError("leq: inputs must be projections");
    return (p * q - p).hs_norm() <= tol && (q * p - p).hs_norm() <= tol;
}

std::size_t corner_dimension(const StarAlgebra& alg, const ComplexMatrix& p, double tol) {
    const double loose = std::max(tol, 1e-8);
    if (!is_projection(p, loose)) throw PreconditionError("corner_dimension: not a projection");
    if (!contains(alg, p, loose)) throw PreconditionError("corner_dimension: P not in algebra");
    std::vector<ComplexMatrix> compressed;
    compressed.reserve(alg.basis.size());
    for (const ComplexMatrix& b : alg.basis) compressed.push_back(p * b * p);
    return orthonormalize(compressed, loose).size();
}

bool is_minimal(const StarAlgebra& alg, const ComplexMatrix& p, double tol) {
    if (p.hs_norm() <= std::max(tol, 1e-8))
        throw PreconditionError("is_minimal: zero projection");
    return corner_dimension(alg, p, tol) == 1;
}

std::size_t projection_rank(const ComplexMatrix& p, double tol) {
    if (!is_projection(p, std::max(tol, 1e-6)))
        throw PreconditionError("projection_rank: not a projection");
    const EigenResult eig = hermitian_eig(p, 1e-6);
    std::size_t rank = 0;
    for (double lam : eig.eigenvalues)
        if (lam > 0.5) ++rank;
    return rank;
}

ProjectionFamily minimal_decomposition(const StarAlgebra& alg, const ComplexMatrix& p,
                                       std::uint64_t seed, double tol) {
    const double loose = std::max(tol, 1e-8);
    if (!is_projection(p, loose))
        throw PreconditionError("minimal_decomposition: input is not a projection");
    if (p.hs_norm() <= loose)
        throw PreconditionError("minimal_decomposition: zero projection");
    if (!contains(alg, p, loose))
        throw PreconditionError("minimal_decomposition: P not in algebra");

    std::mt19937_64 rng(seed);
    ProjectionFamily family;
    family.parent = p;
    try {
        decompose_recursive(alg, p, rng, tol, family.members);
    } catch (const StructuralError& e) {
        throw StructuralError(std::string(e.what()) + " (seed " + std::to_string(seed) + ")");
    }

    // Deterministic ordering: descending rank, then lexicographic real parts
    // of the first column.
    std::sort(family.members.begin(), family.members.end(),
              [tol](const ComplexMatrix& a, const ComplexMatrix& b) {
                  const std::size_t ra = projection_rank(a, tol);
                  const std::size_t rb = projection_rank(b, tol);
                  if (ra != rb) return ra > rb;
                  for (std::size_t i = 0; i < a.rows(); ++i) {
                      const double da = a(i, 0).real();
                      const double db = b(i, 0).real();
                      if (std::abs(da - db) > 1e-9) return da < db;
                  }
                  return false;
              });
    return family;
}

ProjectionFamily unit_decomposition(const StarAlgebra& alg, std::uint64_t seed, double tol) {
    return minimal_decomposition(alg, unit(alg, tol), seed, tol);
}

}  // namespace starkit
