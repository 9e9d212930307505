#include "starkit/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "starkit/spectral.hpp"

namespace starkit {

std::size_t hom_dim(const StarAlgebra& alg, const ComplexMatrix& p, const ComplexMatrix& q,
                    double tol) {
    if (!is_minimal(alg, p, tol) || !is_minimal(alg, q, tol))
        throw PreconditionError("hom_dim: inputs must be minimal projections");
    std::vector<ComplexMatrix> compressed;
    compressed.reserve(alg.basis.size());
    for (const ComplexMatrix& b : alg.basis) compressed.push_back(q * b * p);
    const std::size_t rank = orthonormalize(compressed, std::max(tol, 1e-8)).size();
    if (rank > 1)
        throw StructuralError("hom_dim: rank exceeds 1 between minimal projections");
    return rank;
}

BlockStructure block_structure(const StarAlgebra& alg, std::uint64_t seed, double tol) {
    BlockStructure bs;
    bs.minimal_family = unit_decomposition(alg, seed, tol);
    const std::size_t d = bs.minimal_family.members.size();
    bs.total_d = d;

    std::vector<std::vector<std::size_t>> rel(d, std::vector<std::size_t>(d, 0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            rel[i][j] = hom_dim(alg, bs.minimal_family.members[j],
                                bs.minimal_family.members[i], tol);

    for (std::size_t i = 0; i < d; ++i)
        if (rel[i][i] != 1)
            throw StructuralError("block_structure: relation is not reflexive");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (rel[i][j] != rel[j][i])
                throw StructuralError("block_structure: relation is not symmetric");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (rel[i][j] == 1 && rel[j][k] == 1 && rel[i][k] != 1)
                    throw StructuralError("block_structure: relation is not transitive");

    std::vector<bool> seen(d, false);
    for (std::size_t i = 0; i < d; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> cls;
        for (std::size_t j = 0; j < d; ++j) {
            if (rel[i][j] == 1) {
                cls.push_back(j);
                seen[j] = true;
            }
        }
        const std::size_t mult = projection_rank(bs.minimal_family.members[cls.front()], tol);
        for (std::size_t j : cls)
            if (projection_rank(bs.minimal_family.members[j], tol) != mult)
                throw StructuralError("block_structure: multiplicity varies within a class");
        bs.classes.push_back(std::move(cls));
        bs.multiplicities.push_back(mult);
    }

    for (const auto& cls : bs.classes) bs.block_sizes.push_back(cls.size());

    // Canonical block order: descending d_k, then descending m_k, then by
    // trace of the class projection sum.
    std::vector<std::size_t> order(bs.classes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (bs.block_sizes[a] != bs.block_sizes[b]) return bs.block_sizes[a] > bs.block_sizes[b];
        if (bs.multiplicities[a] != bs.multiplicities[b])
            return bs.multiplicities[a] > bs.multiplicities[b];
        auto class_trace = [&](std::size_t k) {
            double t = 0.0;
            for (std::size_t j : bs.classes[k])
                t += bs.minimal_family.members[j].trace().real();
            return t;
        };
        const double ta = class_trace(a), tb = class_trace(b);
        if (std::abs(ta - tb) > 1e-9) return ta > tb;
        return bs.classes[a].front() < bs.classes[b].front();
    });
    BlockStructure sorted = bs;
    for (std::size_t k = 0; k < order.size(); ++k) {
        sorted.classes[k] = bs.classes[order[k]];
        sorted.block_sizes[k] = bs.block_sizes[order[k]];
        sorted.multiplicities[k] = bs.multiplicities[order[k]];
    }
    bs = std::move(sorted);

    std::size_t dim_sum = 0;
    for (std::size_t dk : bs.block_sizes) dim_sum += dk * dk;
    if (dim_sum != alg.dim())
        throw StructuralError("block_structure: dim(alg) != sum d_k^2");
    return bs;
}

MatrixUnits matrix_units(const StarAlgebra& alg, const BlockStructure& bs, double tol) {
    MatrixUnits units;
    const double loose = std::max(tol, 1e-8);
    for (std::size_t k = 0; k < bs.classes.size(); ++k) {
        const auto& cls = bs.classes[k];
        const std::size_t dk = cls.size();
        const ComplexMatrix& p1 = bs.minimal_family.members[cls[0]];

        // Column of partial isometries E_{i1} : range(P_1) -> range(P_i).
        std::vector<ComplexMatrix> col(dk);
        col[0] = p1;
        for (std::size_t i = 1; i < dk; ++i) {
            const ComplexMatrix& pi = bs.minimal_family.members[cls[i]];
            // Largest compression P_i B P_1 over the algebra basis.
            ComplexMatrix best;
            double best_norm = 0.0;
            for (const ComplexMatrix& b : alg.basis) {
                ComplexMatrix t = pi * b * p1;
                const double norm = t.hs_norm();
                if (norm > best_norm) {
                    best_norm = norm;
                    best = std::move(t);
                }
            }
            if (best_norm <= loose)
                throw StructuralError("matrix_units: no nonzero Hom element in class");
            col[i] = polar(best, tol).u;
        }

        std::vector<std::vector<ComplexMatrix>> block(dk, std::vector<ComplexMatrix>(dk));
        for (std::size_t i = 0; i < dk; ++i)
            for (std::size_t j = 0; j < dk; ++j)
                block[i][j] = col[i] * col[j].adjoint();
        units.blocks.push_back(std::move(block));
    }
    return units;
}

std::vector<ComplexMatrix> to_blocks(const StarAlgebra& alg, const BlockStructure& bs,
                                     const MatrixUnits& units, const ComplexMatrix& a,
                                     double tol) {
    if (!contains(alg, a, std::max(tol, 1e-8)))
        throw PreconditionError("to_blocks: element not in algebra");
    std::vector<ComplexMatrix> out;
    out.reserve(units.blocks.size());
    for (std::size_t k = 0; k < units.blocks.size(); ++k) {
        const std::size_t dk = bs.block_sizes[k];
        const double mk = static_cast<double>(bs.multiplicities[k]);
        ComplexMatrix blk(dk, dk);
        for (std::size_t i = 0; i < dk; ++i)
            for (std::size_t j = 0; j < dk; ++j)
                blk(i, j) = hs_inner(a, units.blocks[k][i][j]) / mk;
        out.push_back(std::move(blk));
    }
    return out;
}

bool is_abelian(const StarAlgebra& alg, double tol) {
    for (std::size_t i = 0; i < alg.basis.size(); ++i) {
        for (std::size_t j = i + 1; j < alg.basis.size(); ++j) {
            const ComplexMatrix comm =
                alg.basis[i] * alg.basis[j] - alg.basis[j] * alg.basis[i];
            if (comm.hs_norm() > tol) return false;
        }
    }
    return true;
}

TheoremReport theorem_report(const StarAlgebra& alg, std::uint64_t seed, double tol) {
    TheoremReport report;
    const BlockStructure bs = block_structure(alg, seed, tol);
    report.dim = alg.dim();
    for (std::size_t k = 0; k < bs.block_count(); ++k)
        report.blocks.emplace_back(bs.block_sizes[k], bs.multiplicities[k]);
    report.abelian = is_abelian(alg, std::max(tol, 1e-8));
    for (const ComplexMatrix& b : alg.basis) {
        const ComplexMatrix sym = 0.5 * (b + b.adjoint());
        report.basis_spectrum_sizes.push_back(spectral_decompose(sym).spectrum_size(tol));
    }
    report.fpp_note =
        "finite dimension implies the fixed point property for nonexpansive maps "
        "(Brouwer); not computed here";
    return report;
}

}  // namespace starkit
