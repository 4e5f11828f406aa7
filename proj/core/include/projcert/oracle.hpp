#pragma once

#include <vector>

#include "projcert/set.hpp"
#include "projcert/types.hpp"

namespace projcert {

// Independent brute-force projection: multiresolution grid search over a
// parametrization of the set (dimension of the search space <= 3), with
// unbounded directions truncated to half-width 10 * scale. Polytopes are
// dispatched to the Frank-Wolfe oracle.
Vector oracle_project(const SetDescriptor& s, const Vector& x,
                      double resolution, double scale = 1.0);

// Pairwise conditional-gradient projection onto a convex hull with exact
// line search, capped at 10^4 iterations. Terminates when the duality gap
// certifies the requested accuracy.
Vector frank_wolfe_project(const std::vector<Vector>& vertices,
                           const Vector& x, double tol = 1e-6,
                           int max_iter = 10000);

// Dykstra's alternating projections onto an intersection of catalog sets.
Vector dykstra_project(const std::vector<SetDescriptor>& sets, const Vector& x,
                       int max_iter = 10000, double tol = 1e-12);

// Direct membership test used by the grid oracle: inequality/residual
// predicates per variant, independent of the closed-form projectors.
bool oracle_member(const SetDescriptor& s, const Vector& y, double tol);

}  // namespace projcert
