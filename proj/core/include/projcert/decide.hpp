#pragma once

#include <vector>

#include "projcert/combination.hpp"
#include "projcert/set.hpp"
#include "projcert/types.hpp"

namespace projcert {

// Is P_C + P_D a projector? Structural rules first (singletons, subspaces,
// cones, 1-D dichotomy), then sampled constancy of <P_C x, P_D x>.
Certificate decide_pair_sum(const SetDescriptor& c, const SetDescriptor& d,
                            const SampleConfig& cfg);

// Is sum alpha_i P_{C_i} a projector? Structural reductions, then
// monotonicity plus sampled constancy of the combination criterion.
Certificate decide_linear_combination(const Combination& comb,
                                      const SampleConfig& cfg);

// Convex weights: anchored test v_i in (C_k - C_k)^perp and C_i = C_k + v_i.
Certificate decide_convex_combination(const Combination& comb,
                                      const SampleConfig& cfg);

// Sum of cone projectors: pairwise orthogonality of projections; certifying
// families of size <= 12 also have every nonempty sub-family re-verified.
Certificate decide_cone_family_sum(const std::vector<SetDescriptor>& cones,
                                   const SampleConfig& cfg);

// Two rays sum to a projector iff orthogonal or antipodal.
bool decide_ray_pair(const Vector& u, const Vector& v);

// Sum of ray projectors equals the generated-cone projector iff generators
// are pairwise orthogonal-or-antipodal with at most one antipodal partner.
Certificate decide_generated_cone(const std::vector<Vector>& generators,
                                  const SampleConfig& cfg = {});

// Is P_{K1} + P_{K2} - Id the projector of K1 cap K2?
Certificate cone_intersection_projector(const SetDescriptor& k1,
                                        const SetDescriptor& k2,
                                        const SampleConfig& cfg);

// Is P_{K1} - P_{K2} a projector (onto K1 cap K2^-)?
Certificate cone_difference_projector(const SetDescriptor& k1,
                                      const SetDescriptor& k2,
                                      const SampleConfig& cfg);

// One-dimensional dichotomy: both singletons, or neither and C cap D = {0}
// (a {0} operand sums trivially).
Certificate decide_1d_pair(const SetDescriptor& c, const SetDescriptor& d);

struct MatrixProjectorResult {
  bool is_orthogonal_projector = false;
  Matrix range_basis;  // orthonormal columns spanning ran L when true
};

// L is an orthogonal projector iff L = L^T L.
MatrixProjectorResult matrix_projector_check(const Matrix& L);

// Route a combination to the most specific decision procedure.
Certificate decide(const Combination& comb, const SampleConfig& cfg);

}  // namespace projcert
