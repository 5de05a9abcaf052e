#ifndef THREECOLOUR_LINSOLVE_HPP
#define THREECOLOUR_LINSOLVE_HPP

#include <vector>

#include "threecolour/rational.hpp"

namespace threecolour {

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

// Affine description of the solution set of A x = b: every solution is
// particular + span(kernel). kernel is empty exactly when the solution is
// unique.
struct LinearSolution {
    RatVector particular;
    std::vector<RatVector> kernel;
};

// Exact solve of a (possibly rectangular, possibly singular) rational system
// by fraction-free Bareiss elimination on the denominator-cleared matrix.
// Throws Inconsistent when no solution exists.
LinearSolution solve_exact_linear(const RatMatrix& a, const RatVector& b);

} // namespace threecolour

#endif
