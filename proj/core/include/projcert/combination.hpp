#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "projcert/set.hpp"
#include "projcert/types.hpp"

namespace projcert {

// Sum alpha_i * P_{C_i}.
struct Combination {
  std::vector<std::pair<double, SetDescriptor>> terms;

  double alpha() const;        // sum of coefficients, always recomputed
  int dimension() const;
  Vector apply(const Vector& x) const;
  void validate() const;
};

enum class Verdict { IsProjector, NotProjector, Inconclusive };

// A pair of inputs that reproduces the violated condition: two points with
// differing criterion value (constancy/homogeneity), or a monotonicity pair.
struct Witness {
  std::string kind;
  Vector a;
  Vector b;
};

struct Evidence {
  std::uint64_t seed = 0;
  int samples = 0;
  double min = 0.0;
  double max = 0.0;
};

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  std::string method;
  std::optional<double> gamma;
  std::optional<Witness> witness;
  std::optional<SetDescriptor> result_set;
  Evidence evidence;
  std::string confidence = "exact";  // "exact" | "sampled"
  std::string diagnostics;

  bool is_projector() const { return verdict == Verdict::IsProjector; }
};

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const Combination& c);
Combination combination_from_json(const nlohmann::json& j);

}  // namespace projcert
