#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "starkit/structure.hpp"
#include "test_support.hpp"

using namespace starkit;
using namespace starkit::testsupport;

namespace {

StarAlgebra full_m2() { return generate({ComplexMatrix::unit_entry(2, 0, 1)}); }

StarAlgebra diagonal_m3() {
    ComplexMatrix d(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    d(2, 2) = 3.0;
    return generate({d});
}

StarAlgebra block_2_1() {
    ComplexMatrix g1(3, 3);
    g1(0, 1) = 1.0;
    ComplexMatrix g2(3, 3);
    g2(2, 2) = 1.0;
    return generate({g1, g2});
}

std::vector<std::pair<std::size_t, std::size_t>> recovered_multiset(const BlockStructure& bs) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t k = 0; k < bs.block_count(); ++k)
        out.emplace_back(bs.block_sizes[k], bs.multiplicities[k]);
    std::sort(out.begin(), out.end());
    return out;
}

void check_matrix_unit_relations(const StarAlgebra& alg, const BlockStructure& bs,
                                 const MatrixUnits& units, double tol) {
    ComplexMatrix diag_sum(alg.ambient_dim, alg.ambient_dim);
    for (std::size_t k = 0; k < units.blocks.size(); ++k) {
        const auto& block = units.blocks[k];
        const std::size_t dk = block.size();
        for (std::size_t i = 0; i < dk; ++i) {
            diag_sum += block[i][i];
            for (std::size_t j = 0; j < dk; ++j) {
                CHECK((block[i][j].adjoint() - block[j][i]).hs_norm() < tol);
                for (std::size_t p = 0; p < dk; ++p)
                    for (std::size_t q = 0; q < dk; ++q) {
                        const ComplexMatrix prod = block[i][j] * block[p][q];
                        if (j == p)
                            CHECK((prod - block[i][q]).hs_norm() < tol);
                        else
                            CHECK(prod.hs_norm() < tol);
                    }
            }
        }
    }
    CHECK((diag_sum - unit(alg)).hs_norm() < tol);
    (void)bs;
}

}  // namespace

TEST_CASE("hom_dim on elementary minimal projections") {
    const StarAlgebra full = full_m2();
    const ComplexMatrix e11 = ComplexMatrix::unit_entry(2, 0, 0);
    const ComplexMatrix e22 = ComplexMatrix::unit_entry(2, 1, 1);
    CHECK(hom_dim(full, e11, e22) == 1);
    CHECK(hom_dim(full, e11, e11) == 1);

    ComplexMatrix d(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    const StarAlgebra diag = generate({d});
    CHECK(hom_dim(diag, e11, e22) == 0);

    const StarAlgebra blk = block_2_1();
    const ProjectionFamily fam = unit_decomposition(blk, 3);
    const ComplexMatrix e33 = ComplexMatrix::unit_entry(3, 2, 2);
    for (const auto& p : fam.members) {
        if ((p - e33).hs_norm() < 1e-7) continue;
        CHECK(hom_dim(blk, p, e33) == 0);
    }
}

TEST_CASE("hom_dim rejects non-minimal input") {
    const StarAlgebra full = full_m2();
    CHECK_THROWS_AS(
        hom_dim(full, ComplexMatrix::identity(2), ComplexMatrix::unit_entry(2, 0, 0)),
        PreconditionError);
}

TEST_CASE("hom_dim symmetry on random block algebras") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + trial % 5;
        const StarAlgebra alg = random_block_algebra(n, random_signature(n, rng), rng);
        const ProjectionFamily fam = unit_decomposition(alg, 11 + trial);
        for (std::size_t i = 0; i < fam.members.size(); ++i)
            for (std::size_t j = 0; j < fam.members.size(); ++j)
                CHECK(hom_dim(alg, fam.members[i], fam.members[j]) ==
                      hom_dim(alg, fam.members[j], fam.members[i]));
    }
}

TEST_CASE("block_structure of the full 2x2 algebra") {
    const BlockStructure bs = block_structure(full_m2(), 0);
    REQUIRE(bs.block_count() == 1);
    CHECK(bs.block_sizes[0] == 2);
    CHECK(bs.multiplicities[0] == 1);
    CHECK(bs.total_d == 2);
}

TEST_CASE("block_structure of the diagonal algebra of M3") {
    const BlockStructure bs = block_structure(diagonal_m3(), 0);
    REQUIRE(bs.block_count() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(bs.block_sizes[k] == 1);
        CHECK(bs.multiplicities[k] == 1);
    }
}

TEST_CASE("block_structure of a conjugated M2 tensor I2 plus M1 in M5") {
    std::mt19937_64 rng(37);
    const Signature sig{{2, 2}, {1, 1}};
    const std::size_t n = 5;
    const ComplexMatrix u = random_unitary(n, rng);
    const StarAlgebra alg =
        generate({random_block_element(n, sig, u, rng), random_block_element(n, sig, u, rng)});
    REQUIRE(alg.dim() == 5);

    const BlockStructure bs = block_structure(alg, 7);
    const std::vector<std::pair<std::size_t, std::size_t>> expected{{1, 1}, {2, 2}};
    CHECK(recovered_multiset(bs) == expected);
}

TEST_CASE("matrix_units of the elementary decomposition of M2 match e_ij up to phase") {
    const StarAlgebra alg = full_m2();
    BlockStructure bs;
    bs.minimal_family.parent = ComplexMatrix::identity(2);
    bs.minimal_family.members = {ComplexMatrix::unit_entry(2, 0, 0),
                                 ComplexMatrix::unit_entry(2, 1, 1)};
    bs.classes = {{0, 1}};
    bs.block_sizes = {2};
    bs.multiplicities = {1};
    bs.total_d = 2;

    const MatrixUnits units = matrix_units(alg, bs);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const ComplexMatrix& e = units.blocks[0][i][j];
            // Entry pattern of e_ij up to a unit phase.
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) {
                    const double expected = (r == i && c == j) ? 1.0 : 0.0;
                    CHECK(std::abs(std::abs(e(r, c)) - expected) < 1e-9);
                }
        }
    check_matrix_unit_relations(alg, bs, units, 1e-9);
}

TEST_CASE("matrix_units of an abelian algebra are the minimal projections") {
    const StarAlgebra alg = diagonal_m3();
    const BlockStructure bs = block_structure(alg, 0);
    const MatrixUnits units = matrix_units(alg, bs);
    REQUIRE(units.blocks.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        REQUIRE(units.blocks[k].size() == 1);
        CHECK(is_projection(units.blocks[k][0][0], 1e-9));
    }
    check_matrix_unit_relations(alg, bs, units, 1e-8);
}

TEST_CASE("matrix_units relations on random conjugated block algebras") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 3 + trial % 6;
        const StarAlgebra alg = random_block_algebra(n, random_signature(n, rng), rng);
        const BlockStructure bs = block_structure(alg, 31 + trial);
        const MatrixUnits units = matrix_units(alg, bs);
        check_matrix_unit_relations(alg, bs, units, 1e-8);
    }
}

TEST_CASE("to_blocks of the unit and of matrix units") {
    std::mt19937_64 rng(53);
    const Signature sig{{2, 2}, {1, 1}};
    const ComplexMatrix u = random_unitary(5, rng);
    const StarAlgebra alg =
        generate({random_block_element(5, sig, u, rng), random_block_element(5, sig, u, rng)});
    const BlockStructure bs = block_structure(alg, 3);
    const MatrixUnits units = matrix_units(alg, bs);

    const auto unit_blocks = to_blocks(alg, bs, units, unit(alg));
    for (std::size_t k = 0; k < unit_blocks.size(); ++k)
        CHECK((unit_blocks[k] - ComplexMatrix::identity(bs.block_sizes[k])).hs_norm() < 1e-8);

    // E^{(k)}_{ij} maps to the single entry (i, j) of block k.
    for (std::size_t k = 0; k < units.blocks.size(); ++k) {
        const auto blocks = to_blocks(alg, bs, units, units.blocks[k][0][bs.block_sizes[k] - 1]);
        for (std::size_t l = 0; l < blocks.size(); ++l) {
            ComplexMatrix expected(bs.block_sizes[l], bs.block_sizes[l]);
            if (l == k) expected(0, bs.block_sizes[k] - 1) = 1.0;
            CHECK((blocks[l] - expected).hs_norm() < 1e-8);
        }
    }
}

TEST_CASE("to_blocks is multiplicative, additive and adjoint-compatible") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 4 + trial % 4;
        const Signature sig = random_signature(n, rng);
        const ComplexMatrix u = random_unitary(n, rng);
        const StarAlgebra alg = generate(
            {random_block_element(n, sig, u, rng), random_block_element(n, sig, u, rng)});
        const BlockStructure bs = block_structure(alg, 71 + trial);
        const MatrixUnits units = matrix_units(alg, bs);

        for (int pair = 0; pair < 10; ++pair) {
            const ComplexMatrix a = random_block_element(n, sig, u, rng);
            const ComplexMatrix b = random_block_element(n, sig, u, rng);
            const auto ba = to_blocks(alg, bs, units, a);
            const auto bb = to_blocks(alg, bs, units, b);
            const auto bab = to_blocks(alg, bs, units, a * b);
            const auto bsum = to_blocks(alg, bs, units, a + b);
            const auto badj = to_blocks(alg, bs, units, a.adjoint());
            double norm_sq = 0.0;
            for (std::size_t k = 0; k < ba.size(); ++k) {
                CHECK((bab[k] - ba[k] * bb[k]).hs_norm() <
                      1e-8 * std::max(1.0, a.hs_norm() * b.hs_norm()));
                CHECK((bsum[k] - (ba[k] + bb[k])).hs_norm() < 1e-8);
                CHECK((badj[k] - ba[k].adjoint()).hs_norm() < 1e-8);
                norm_sq += ba[k].hs_norm() * ba[k].hs_norm();
            }
            // Injectivity: nonzero elements have nonzero block image.
            CHECK(std::sqrt(norm_sq) > 1e-9 * a.hs_norm());
        }
    }
}

TEST_CASE("to_blocks rejects elements outside the algebra") {
    const StarAlgebra alg = diagonal_m3();
    const BlockStructure bs = block_structure(alg, 0);
    const MatrixUnits units = matrix_units(alg, bs);
    CHECK_THROWS_AS(to_blocks(alg, bs, units, ComplexMatrix::unit_entry(3, 0, 1)),
                    PreconditionError);
}

TEST_CASE("is_abelian on reference algebras") {
    CHECK(is_abelian(diagonal_m3()));
    CHECK_FALSE(is_abelian(full_m2()));
}

TEST_CASE("abelian random sums of 1x1 blocks have all block sizes 1") {
    std::mt19937_64 rng(67);
    const Signature sig{{1, 2}, {1, 1}, {1, 1}};
    const StarAlgebra alg = random_block_algebra(4, sig, rng);
    CHECK(is_abelian(alg, 1e-8));
    const BlockStructure bs = block_structure(alg, 0);
    for (std::size_t dk : bs.block_sizes) CHECK(dk == 1);
}

TEST_CASE("dim(alg) is at most total_d squared, equal only for one block") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 3 + trial % 6;
        const StarAlgebra alg = random_block_algebra(n, random_signature(n, rng), rng);
        const BlockStructure bs = block_structure(alg, 83 + trial);
        CHECK(alg.dim() <= bs.total_d * bs.total_d);
        if (bs.block_count() == 1) CHECK(alg.dim() == bs.total_d * bs.total_d);
        if (bs.block_count() > 1) CHECK(alg.dim() < bs.total_d * bs.total_d);
    }
}

TEST_CASE("theorem_report on reference algebras") {
    const TheoremReport full = theorem_report(full_m2(), 0);
    CHECK(full.dim == 4);
    REQUIRE(full.blocks.size() == 1);
    CHECK(full.blocks[0].first == 2);
    CHECK_FALSE(full.abelian);

    const TheoremReport diag = theorem_report(diagonal_m3(), 0);
    CHECK(diag.dim == 3);
    CHECK(diag.blocks.size() == 3);
    CHECK(diag.abelian);
    for (std::size_t s : diag.basis_spectrum_sizes) CHECK(s <= 3);
}

TEST_CASE("round trip recovers the constructed signature multiset") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 4 + trial % 9;  // up to 12
        const Signature sig = random_signature(n, rng);
        const StarAlgebra alg = random_block_algebra(n, sig, rng);
        const BlockStructure bs = block_structure(alg, 101 + trial);
        CHECK(recovered_multiset(bs) == signature_multiset(sig));

        std::size_t dim_sum = 0;
        for (const Block& b : sig) dim_sum += b.d * b.d;
        CHECK(alg.dim() == dim_sum);
    }
}
