#include "starkit/fpp_lab.hpp"

#include <cmath>

namespace starkit {

namespace {

constexpr double kMembershipTol = 1e-12;

void check_grid(const GridSpace& space) {
    if (space.points.empty()) throw PreconditionError("grid: no points");
    if (space.base_index >= space.points.size())
        throw PreconditionError("grid: base index out of range");
    for (std::size_t i = 0; i < space.points.size(); ++i)
        for (std::size_t j = i + 1; j < space.points.size(); ++j)
            if (space.points[i] == space.points[j])
                throw PreconditionError("grid: repeated point");
}

}  // namespace

double GridFunction::sup_norm() const {
    double m = 0.0;
    for (const cplx& v : values) m = std::max(m, std::abs(v));
    return m;
}

double sup_norm(const std::vector<cplx>& v) {
    double m = 0.0;
    for (const cplx& x : v) m = std::max(m, std::abs(x));
    return m;
}

GridSpace uniform_grid(std::size_t m) {
    if (m < 2) throw PreconditionError("uniform_grid: need at least 2 points");
    GridSpace space;
    space.base_index = 0;
    space.points.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        space.points.push_back(cplx{static_cast<double>(i) / static_cast<double>(m - 1), 0.0});
    return space;
}

GridFunction default_multiplier(const GridSpace& space) {
    check_grid(space);
    const cplx p = space.points[space.base_index];
    GridFunction b;
    b.values.reserve(space.points.size());
    for (std::size_t i = 0; i < space.points.size(); ++i) {
        if (i == space.base_index) {
            b.values.push_back(cplx{1.0, 0.0});
            continue;
        }
        const cplx diff = space.points[i] - p;
        const double dist = std::abs(diff);
        const double mag = std::max(0.0, 1.0 - dist);
        b.values.push_back(mag > 0.0 ? diff / dist * mag : cplx{0.0, 0.0});
    }
    return b;
}

GridFunction goebel_cs_map(const GridSpace& space, const GridFunction& b, const GridFunction& a) {
    check_grid(space);
    const std::size_t m = space.points.size();
    if (a.values.size() != m || b.values.size() != m)
        throw ShapeError("goebel_cs_map: function length does not match grid");
    if (a.sup_norm() > 1.0 + kMembershipTol ||
        std::abs(a.values[space.base_index] - cplx{1.0, 0.0}) > kMembershipTol)
        throw PreconditionError("goebel_cs_map: A is not in K");
    if (std::abs(b.values[space.base_index] - cplx{1.0, 0.0}) > kMembershipTol)
        throw PreconditionError("goebel_cs_map: B must equal 1 at the base point");
    for (std::size_t i = 0; i < m; ++i)
        if (i != space.base_index && std::abs(b.values[i]) >= 1.0)
            throw PreconditionError("goebel_cs_map: |B| must be < 1 away from the base point");

    GridFunction out;
    out.values.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.values[i] = b.values[i] * a.values[i];
    out.values[space.base_index] = cplx{1.0, 0.0};
    return out;
}

std::vector<ProfileEntry> cs_fixed_point_profile(const std::vector<GridSpace>& grids) {
    std::vector<ProfileEntry> out;
    out.reserve(grids.size());
    for (const GridSpace& space : grids) {
        check_grid(space);
        const std::size_t m = space.points.size();
        // Fixed point of M_B in K: (B(s) - 1) A(s) = 0 forces the indicator
        // of the base point.
        std::vector<double> fixed(m, 0.0);
        fixed[space.base_index] = 1.0;
        double lipschitz = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const double num = std::abs(fixed[i] - fixed[j]);
                if (num == 0.0) continue;
                lipschitz = std::max(
                    lipschitz, num / std::abs(space.points[i] - space.points[j]));
            }
        out.push_back(ProfileEntry{m, lipschitz});
    }
    return out;
}

std::vector<cplx> goebel_c0_map(const std::vector<cplx>& a) {
    if (a.empty()) throw PreconditionError("goebel_c0_map: empty vector");
    const double norm = sup_norm(a);
    if (norm > 1.0 + kMembershipTol)
        throw PreconditionError("goebel_c0_map: vector outside the unit ball");
    std::vector<cplx> out(a.size());
    out[0] = cplx{1.0 - norm, 0.0};
    for (std::size_t i = 1; i < a.size(); ++i) out[i] = a[i - 1];
    return out;
}

std::vector<cplx> c0_fixed_point(std::size_t m) {
    if (m == 0) throw PreconditionError("c0_fixed_point: m must be positive");
    return std::vector<cplx>(m, cplx{0.5, 0.0});
}

IterationTrace iterate(const std::function<std::vector<cplx>(const std::vector<cplx>&)>& map,
                       std::vector<cplx> x0, std::size_t steps, double averaging) {
    if (averaging <= 0.0 || averaging > 1.0)
        throw PreconditionError("iterate: averaging must lie in (0, 1]");
    IterationTrace trace;
    trace.steps = steps;
    trace.displacements.reserve(steps);
    trace.norms.reserve(steps);

    std::vector<cplx> x = std::move(x0);
    for (std::size_t t = 0; t < steps; ++t) {
        const std::vector<cplx> y = map(x);
        std::vector<cplx> next(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            next[i] = (1.0 - averaging) * x[i] + averaging * y[i];
        std::vector<cplx> diff(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) diff[i] = next[i] - x[i];
        trace.displacements.push_back(sup_norm(diff));
        trace.norms.push_back(sup_norm(next));
        x = std::move(next);
    }
    return trace;
}

}  // namespace starkit
