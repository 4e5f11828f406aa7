#pragma once

#include <random>

#include "projcert/set.hpp"
#include "projcert/types.hpp"

namespace projcert {

// Nearest point of the set; closed forms throughout, except MinkowskiSum
// (cyclic minimization over the parts) and Polytope (exact active-support
// search over vertex subsets).
Vector project(const SetDescriptor& s, const Vector& x);

// ||x - project(s, x)||^2
double distance_sq(const SetDescriptor& s, const Vector& x);

bool membership(const SetDescriptor& s, const Vector& x, double tol);

// v = P_{cl(D - C)} 0: exact when cl(D - C) reduces to a catalog set,
// otherwise alternating minimization of ||d - c|| over the two sets.
Vector set_difference_witness(const SetDescriptor& c, const SetDescriptor& d,
                              const SampleConfig& cfg);

// A point of the set (projection of a Gaussian draw); used to sample
// set elements in variational-inequality and orthogonality tests.
Vector sample_point(const SetDescriptor& s, std::mt19937_64& rng,
                    double scale);

}  // namespace projcert
