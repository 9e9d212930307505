#ifndef STARKIT_FPP_LAB_HPP
#define STARKIT_FPP_LAB_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "starkit/complex_matrix.hpp"

namespace starkit {

// Finite grid approximating a compact subset of the plane, with a
// distinguished base point.
struct GridSpace {
    std::vector<cplx> points;
    std::size_t base_index = 0;
};

// Function values aligned with a GridSpace.
struct GridFunction {
    std::vector<cplx> values;

    double sup_norm() const;
};

// Per-step displacement and norm records of a map iteration.
struct IterationTrace {
    std::vector<double> displacements;
    std::vector<double> norms;
    std::size_t steps = 0;
};

// Uniformly spaced grid of m points in [0, 1] with base point 0.
GridSpace uniform_grid(std::size_t m);

// The default multiplier: value 1 at the base point, modulus
// max(0, 1 - |s - p|) elsewhere with the phase of s - p retained.
GridFunction default_multiplier(const GridSpace& space);

// Pointwise multiplication A -> B * A on the set K = {||A|| <= 1, A(p) = 1}.
// Validates membership of A in K and admissibility of B.
GridFunction goebel_cs_map(const GridSpace& space, const GridFunction& b, const GridFunction& a);

struct ProfileEntry {
    std::size_t grid_size = 0;
    double discrete_lipschitz = 0.0;
};

// For each grid, the fixed point of the multiplier map in K is the indicator
// of the base point; reports its discrete Lipschitz constant, which blows up
// as the grid refines.
std::vector<ProfileEntry> cs_fixed_point_profile(const std::vector<GridSpace>& grids);

// Truncated shift-and-fill map a -> (1 - ||a||_sup, a_1, ..., a_{m-1}) on the
// sup-norm unit ball.
std::vector<cplx> goebel_c0_map(const std::vector<cplx>& a);

// The unique fixed point of the truncated map: the all-1/2 vector.
std::vector<cplx> c0_fixed_point(std::size_t m);

double sup_norm(const std::vector<cplx>& v);

// Krasnoselskii-Mann iteration x <- (1 - lambda) x + lambda map(x).
IterationTrace iterate(const std::function<std::vector<cplx>(const std::vector<cplx>&)>& map,
                       std::vector<cplx> x0, std::size_t steps, double averaging);

}  // namespace starkit

#endif
