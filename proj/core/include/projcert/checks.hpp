#pragma once

#include <functional>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "projcert/combination.hpp"
#include "projcert/set.hpp"
#include "projcert/types.hpp"

namespace projcert {

struct OperatorHandle {
  std::function<Vector(const Vector&)> evaluator;
  int dimension = 0;
  std::string label;

  Vector operator()(const Vector& x) const { return evaluator(x); }
};

OperatorHandle projector_handle(const SetDescriptor& s);
OperatorHandle combination_handle(const Combination& c);

struct CheckReport {
  std::string check;
  bool pass = false;
  double max_error = 0.0;    // gradient / homogeneity / identity residual
  double min_pairing = 0.0;  // monotonicity / firm nonexpansiveness
  int n_samples = 0;
  std::uint64_t seed = 0;
  double fd_step = 0.0;
  std::vector<std::pair<Vector, Vector>> witnesses;

  nlohmann::json to_json() const;
};

// Central finite differences of f = q(Id - T) against x - Tx; a projector
// has exactly this gradient. Samples straddling a projection kink are
// redrawn (detected by the second difference of T jumping to O(h)).
CheckReport gradient_criterion_check(const OperatorHandle& T,
                                     const SampleConfig& cfg);

// min over sampled pairs of <Tx - Ty, x - y>.
CheckReport monotonicity_check(const OperatorHandle& T,
                               const SampleConfig& cfg);

// T(lambda x) = lambda T(x) for lambda in {1/4, 1, 4}; when both this and
// monotonicity pass, additionally asserts T(0) = 0.
CheckReport homogeneity_check(const OperatorHandle& T,
                              const SampleConfig& cfg);

// <Tx - Ty, x - y> - ||Tx - Ty||^2 >= 0 over sampled pairs.
CheckReport firm_nonexpansiveness_check(const OperatorHandle& T,
                                        const SampleConfig& cfg);

struct IdentityReport {
  double norm_expansion = 0.0;   // weighted norm-expansion identity
  double cross_terms = 0.0;      // unit-coefficient cross-term identity
  double envelope_expansion = 0.0;
  bool pass = false;

  nlohmann::json to_json() const;
};

// Evaluates both sides of the algebraic identities underlying the
// combination criteria, with x_i = P_{C_i} x at each supplied point.
IdentityReport identity_suite(const std::vector<Vector>& points,
                              const Combination& comb);

// phi for the envelope-gradient check: an indicator of a catalog set, or a
// scaled l1 / l2 norm with its closed-form proximal map.
struct PhiSpec {
  enum class Kind { Indicator, L1, L2 } kind;
  std::optional<SetDescriptor> set;  // Indicator
  double lambda = 1.0;               // L1/L2 weight

  static PhiSpec indicator(SetDescriptor s);
  static PhiSpec l1(double lambda);
  static PhiSpec l2(double lambda);

  Vector prox(const Vector& x) const;
  double value(const Vector& x) const;
};

// Central differences of the Moreau envelope against Id - Prox.
CheckReport moreau_envelope_check(const PhiSpec& phi, int dim,
                                  const SampleConfig& cfg);

}  // namespace projcert
