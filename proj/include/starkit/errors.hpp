#ifndef STARKIT_ERRORS_HPP
#define STARKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace starkit {

// Incompatible matrix shapes or malformed inputs.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented precondition was violated (non-Hermitian input, point outside
// the admissible set, non-positive state, ...).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Closure construction exceeded the ambient dimension bound n^2.
struct ClosureOverflowError : std::runtime_error {
    explicit ClosureOverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical results contradict an algebraic identity that must hold
// (equivalence axioms, dimension counts, missing Hom elements).
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace starkit

#endif
