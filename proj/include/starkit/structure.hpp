#ifndef STARKIT_STRUCTURE_HPP
#define STARKIT_STRUCTURE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "starkit/projections.hpp"

namespace starkit {

// Partition of a minimal decomposition of the unit into equivalence classes
// of mutually connected minimal projections, with block sizes d_k and
// multiplicities m_k.
struct BlockStructure {
    ProjectionFamily minimal_family;
    std::vector<std::vector<std::size_t>> classes;  // indices into minimal_family
    std::vector<std::size_t> block_sizes;           // d_k
    std::vector<std::size_t> multiplicities;        // m_k
    std::size_t total_d = 0;

    std::size_t block_count() const { return classes.size(); }
};

// Matrix units per block: blocks[k][i][j] = E^{(k)}_{ij}.
struct MatrixUnits {
    std::vector<std::vector<std::vector<ComplexMatrix>>> blocks;
};

struct TheoremReport {
    std::size_t dim = 0;
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (d_k, m_k)
    bool abelian = false;
    std::vector<std::size_t> basis_spectrum_sizes;  // of symmetrized basis elements
    std::string fpp_note;
};

// dim of Q * alg * P; 0 or 1 when P and Q are minimal.
std::size_t hom_dim(const StarAlgebra& alg, const ComplexMatrix& p, const ComplexMatrix& q,
                    double tol = kDefaultTol);

// Decompose the unit, link minimal projections by hom_dim = 1, verify the
// relation is an equivalence and that dim(alg) = sum d_k^2.
BlockStructure block_structure(const StarAlgebra& alg, std::uint64_t seed,
                               double tol = kDefaultTol);

// Matrix units from polar parts of nonzero Hom elements within each class.
MatrixUnits matrix_units(const StarAlgebra& alg, const BlockStructure& bs,
                         double tol = kDefaultTol);

// Block coordinates of an algebra element: c^(k)_{ij} = <A, E^(k)_{ij}> / m_k.
std::vector<ComplexMatrix> to_blocks(const StarAlgebra& alg, const BlockStructure& bs,
                                     const MatrixUnits& units, const ComplexMatrix& a,
                                     double tol = kDefaultTol);

// All basis commutators vanish within tol.
bool is_abelian(const StarAlgebra& alg, double tol = kDefaultTol);

TheoremReport theorem_report(const StarAlgebra& alg, std::uint64_t seed,
                             double tol = kDefaultTol);

}  // namespace starkit

#endif
