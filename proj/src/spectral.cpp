#include "starkit/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "starkit/projections.hpp"

namespace starkit {

std::size_t SpectralDecomposition::spectrum_size(double tol) const {
    const bool has_kernel = kernel_projection.hs_norm() > std::max(tol, 0.5);
    return lambdas.size() + (has_kernel ? 1 : 0);
}

SpectralDecomposition spectral_decompose(const ComplexMatrix& a, double cluster_tol) {
    const EigenResult eig = hermitian_eig(a, std::max(cluster_tol, kDefaultTol));
    const std::size_t n = a.rows();
    const double gap = cluster_tol * std::max(1.0, a.hs_norm());

    struct Cluster {
        double lambda;
        ComplexMatrix projector;
    };
    std::vector<Cluster> clusters;

    std::size_t start = 0;
    while (start < n) {
        std::size_t stop = start + 1;
        while (stop < n && eig.eigenvalues[stop] - eig.eigenvalues[stop - 1] <= gap) ++stop;

        double mean = 0.0;
        for (std::size_t k = start; k < stop; ++k) mean += eig.eigenvalues[k];
        mean /= static_cast<double>(stop - start);

        ComplexMatrix proj(n, n);
        for (std::size_t k = start; k < stop; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    proj(i, j) += eig.basis(i, k) * std::conj(eig.basis(j, k));

        clusters.push_back(Cluster{mean, std::move(proj)});
        start = stop;
    }

    SpectralDecomposition dec;
    dec.kernel_projection = ComplexMatrix(n, n);
    std::vector<Cluster> nonzero;
    for (auto& c : clusters) {
        if (std::abs(c.lambda) <= gap)
            dec.kernel_projection += c.projector;
        else
            nonzero.push_back(std::move(c));
    }
    std::sort(nonzero.begin(), nonzero.end(), [](const Cluster& x, const Cluster& y) {
        const double ax = std::abs(x.lambda), ay = std::abs(y.lambda);
        if (ax != ay) return ax > ay;
        return x.lambda > y.lambda;
    });
    for (auto& c : nonzero) {
        dec.lambdas.push_back(c.lambda);
        dec.projections.push_back(std::move(c.projector));
    }
    return dec;
}

ComplexMatrix lagrange_projector(const ComplexMatrix& a, const SpectralDecomposition& dec,
                                 std::size_t j) {
    const std::size_t d = dec.lambdas.size();
    if (j >= d) throw PreconditionError("lagrange_projector: cluster index out of range");
    const double lam = dec.lambdas[j];
    if (std::abs(lam) <= kDefaultTol * std::max(1.0, a.hs_norm()))
        throw PreconditionError("lagrange_projector: node too close to zero");

    const std::size_t n = a.rows();
    // Node-product form of L_j, evaluated at the matrix argument.
    ComplexMatrix poly = ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < d; ++i) {
        if (i == j) continue;
        ComplexMatrix shifted = a;
        for (std::size_t k = 0; k < n; ++k) shifted(k, k) -= dec.lambdas[i];
        poly = poly * shifted;
        poly *= cplx{1.0 / (lam - dec.lambdas[i]), 0.0};
    }
    return (a * poly) * cplx{1.0 / lam, 0.0};
}

DimensionIdentity cstar_dimension_identity(const ComplexMatrix& a, double tol) {
    const SpectralDecomposition dec = spectral_decompose(a);
    const StarAlgebra alg = generate({a, ComplexMatrix::identity(a.rows())}, tol);
    return DimensionIdentity{alg.dim(), dec.spectrum_size(tol)};
}

ComplexMatrix chain_element(const std::vector<ComplexMatrix>& chain, double tol) {
    if (chain.empty()) throw ShapeError("chain_element: empty chain");
    for (const ComplexMatrix& p : chain)
        if (!is_projection(p, std::max(tol, 1e-8)))
            throw PreconditionError("chain_element: member is not a projection");
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        if (!leq(chain[k], chain[k + 1], std::max(tol, 1e-8)) ||
            (chain[k + 1] - chain[k]).hs_norm() <= tol)
            throw PreconditionError("chain_element: chain is not strictly increasing");
    }

    ComplexMatrix out(chain.front().rows(), chain.front().cols());
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        out += cplx{1.0 / static_cast<double>(k + 1), 0.0} * (chain[k + 1] - chain[k]);
    return out;
}

}  // namespace starkit
