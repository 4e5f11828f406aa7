#include "projcert/combination.hpp"

#include <cmath>

#include "projcert/errors.hpp"
#include "projcert/json_util.hpp"
#include "projcert/project.hpp"

namespace projcert {

double Combination::alpha() const {
  double a = 0.0;
  for (const auto& [ai, s] : terms) a += ai;
  return a;
}

int Combination::dimension() const {
  if (terms.empty()) throw InvalidDescriptor("combination has no terms");
  return projcert::dimension(terms.front().second);
}

Vector Combination::apply(const Vector& x) const {
  Vector y = Vector::Zero(x.size());
  for (const auto& [ai, s] : terms) y += ai * project(s, x);
  return y;
}

void Combination::validate() const {
  if (terms.empty()) throw InvalidDescriptor("combination has no terms");
  const int n = dimension();
  for (const auto& [ai, s] : terms) {
    if (!std::isfinite(ai))
      throw InvalidDescriptor("combination coefficient must be finite");
    if (projcert::dimension(s) != n)
      throw DimensionMismatch("combination terms disagree on dimension");
  }
}

nlohmann::json to_json(const Combination& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [ai, s] : c.terms)
    terms.push_back({{"alpha", ai}, {"set", to_json(s)}});
  return {{"terms", terms}};
}

Combination combination_from_json(const nlohmann::json& j) {
  require_keys(j, {"terms"});
  const auto& ts = require_field(j, "terms");
  if (!ts.is_array() || ts.empty())
    throw ParseError("combination needs a nonempty terms array");
  Combination c;
  for (const auto& t : ts) {
    require_keys(t, {"alpha", "set"});
    const auto& a = require_field(t, "alpha");
    if (!a.is_number()) throw ParseError("alpha must be a number");
    c.terms.emplace_back(a.get<double>(),
                         set_from_json(require_field(t, "set")));
  }
  c.validate();
  return c;
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  switch (c.verdict) {
    case Verdict::IsProjector: j["verdict"] = "IsProjector"; break;
    case Verdict::NotProjector: j["verdict"] = "NotProjector"; break;
    case Verdict::Inconclusive: j["verdict"] = "Inconclusive"; break;
  }
  j["method"] = c.method;
  j["gamma"] = c.gamma ? nlohmann::json(*c.gamma) : nlohmann::json(nullptr);
  if (c.witness) {
    j["witness"] = {{"kind", c.witness->kind},
                    {"a", vec_to_json(c.witness->a)},
                    {"b", vec_to_json(c.witness->b)}};
  } else {
    j["witness"] = nullptr;
  }
  j["result_set"] =
      c.result_set ? to_json(*c.result_set) : nlohmann::json(nullptr);
  j["evidence"] = {{"seed", c.evidence.seed},
                   {"samples", c.evidence.samples},
                   {"min", c.evidence.min},
                   {"max", c.evidence.max}};
  j["confidence"] = c.confidence;
  if (!c.diagnostics.empty()) j["diagnostics"] = c.diagnostics;
  return j;
}

}  // namespace projcert
