#include "starkit/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace starkit {

namespace {

double offdiag_mass(const ComplexMatrix& m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) sum += std::norm(m(i, j));
    return std::sqrt(sum);
}

// Fix each eigenvector phase: first component with non-negligible modulus
// is made real positive.
void normalize_phases(ComplexMatrix& v) {
    const std::size_t n = v.rows();
    for (std::size_t j = 0; j < v.cols(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const double mag = std::abs(v(i, j));
            if (mag > 1e-12) {
                const cplx phase = std::conj(v(i, j)) / mag;
                for (std::size_t k = 0; k < n; ++k) v(k, j) *= phase;
                break;
            }
        }
    }
}

}  // namespace

EigenResult hermitian_eig(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) throw ShapeError("hermitian_eig: matrix not square");
    const double scale = a.hs_norm();
    if (hermitian_defect(a) > tol * std::max(1.0, scale))
        throw PreconditionError("hermitian_eig: matrix is not Hermitian within tolerance");

    const std::size_t n = a.rows();
    // Work on the Hermitian part so roundoff in the input cannot leak into
    // the rotations.
    ComplexMatrix m = 0.5 * (a + a.adjoint());
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double target = 1e-14 * std::max(scale, 1e-300);
    const int max_sweeps = 50;
    for (int sweep = 0; sweep < max_sweeps && offdiag_mass(m) > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx z = m(p, q);
                const double zmag = std::abs(z);
                if (zmag <= target / (double)(n * n)) continue;

                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                const double tau = (app - aqq) / (2.0 * zmag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx phase = z / zmag;  // e^{i phi}

                // Columns: M <- M * U, U acting on the (p,q) plane.
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx mip = m(i, p);
                    const cplx miq = m(i, q);
                    m(i, p) = c * mip + s * std::conj(phase) * miq;
                    m(i, q) = -s * phase * mip + c * miq;
                }
                // Rows: M <- U^* M.
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx mpj = m(p, j);
                    const cplx mqj = m(q, j);
                    m(p, j) = c * mpj + s * phase * mqj;
                    m(q, j) = -s * std::conj(phase) * mpj + c * mqj;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                m(p, p) = cplx{m(p, p).real(), 0.0};
                m(q, q) = cplx{m(q, q).real(), 0.0};

                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vip = v(i, p);
                    const cplx viq = v(i, q);
                    v(i, p) = c * vip + s * std::conj(phase) * viq;
                    v(i, q) = -s * phase * vip + c * viq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return m(i, i).real() < m(j, j).real(); });

    EigenResult result;
    result.eigenvalues.resize(n);
    result.basis = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        result.eigenvalues[j] = m(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) result.basis(i, j) = v(i, order[j]);
    }
    normalize_phases(result.basis);
    return result;
}

PolarDecomposition polar(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) throw ShapeError("polar: matrix not square");
    const std::size_t n = a.rows();

    // Diagonalize the Hermitian dilation [[0, A], [A^*, 0]] instead of A^*A:
    // squaring would bury small singular values in sqrt(eps)-level noise and
    // let spurious directions through the rank cut.
    ComplexMatrix h(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            h(i, n + j) = a(i, j);
            h(n + j, i) = std::conj(a(i, j));
        }
    const EigenResult eig = hermitian_eig(h, std::max(tol, 1e-9));

    double smax = 0.0;
    for (double lam : eig.eigenvalues) smax = std::max(smax, lam);
    const double cut = tol * std::max(1.0, smax);

    // Eigenpairs come as (x, y) at +sigma and (x, -y) at -sigma with
    // A = sum 2 sigma x y^*; the positive half rebuilds U and P = |A|.
    ComplexMatrix u(n, n), p(n, n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
        const double lam = eig.eigenvalues[k];
        if (lam <= 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const cplx yj_conj = std::conj(eig.basis(n + j, k));
                p(i, j) += cplx{2.0 * lam, 0.0} * eig.basis(n + i, k) * yj_conj;
                if (lam > cut) u(i, j) += cplx{2.0, 0.0} * eig.basis(i, k) * yj_conj;
            }
        }
    }
    return PolarDecomposition{u, p};
}

std::vector<ComplexMatrix> orthonormalize(const std::vector<ComplexMatrix>& family, double tol) {
    std::vector<ComplexMatrix> basis;
    if (family.empty()) return basis;
    for (std::size_t i = 1; i < family.size(); ++i)
        if (!family[i].same_shape(family[0]))
            throw ShapeError("orthonormalize: family members differ in shape");

    for (const ComplexMatrix& x : family) {
        ComplexMatrix y = x;
        // Two projection passes keep mutual inner products near roundoff.
        for (int pass = 0; pass < 2; ++pass)
            for (const ComplexMatrix& q : basis) y -= hs_inner(y, q) * q;
        const double norm = y.hs_norm();
        if (norm <= tol * std::max(1.0, x.hs_norm())) continue;
        y *= cplx{1.0 / norm, 0.0};
        basis.push_back(std::move(y));
    }
    return basis;
}

}  // namespace starkit
