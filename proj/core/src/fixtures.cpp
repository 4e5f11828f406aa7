#include "projcert/fixtures.hpp"

#include <cmath>

#include "projcert/checks.hpp"
#include "projcert/decide.hpp"
#include "projcert/errors.hpp"
#include "projcert/json_util.hpp"
#include "projcert/project.hpp"

namespace projcert {

namespace {

std::string verdict_name(const Certificate& c) {
  switch (c.verdict) {
    case Verdict::IsProjector: return "IsProjector";
    case Verdict::NotProjector: return "NotProjector";
    default: return "Inconclusive";
  }
}

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

// (1)P_C + (-1)P_C collapses to P_{{0}} even though C - C is not {0}.
FixtureResult fx_counter_sum(const SampleConfig& cfg) {
  FixtureResult r{"counter-sum", "IsProjector", "", false, {}};
  SetDescriptor c = make_box(vec2(0, 0), vec2(1, 1));
  Combination comb{{{1.0, c}, {-1.0, c}}};
  Certificate cert = decide_linear_combination(comb, cfg);
  r.observed = verdict_name(cert);
  bool zero_result =
      cert.result_set && singleton_point(*cert.result_set) &&
      singleton_point(*cert.result_set)->norm() == 0;
  // the coefficient-weighted set C - C is a genuine box, not {0}
  SetDescriptor diff = make_box(vec2(-1, -1), vec2(1, 1));
  Vector probe = vec2(2, 2);
  bool diff_nontrivial = project(diff, probe).norm() > 0.5;
  r.match = cert.is_projector() && zero_result && diff_nontrivial;
  r.details = {{"certificate", to_json(cert)},
               {"difference_set_projection_at_2_2",
                vec_to_json(project(diff, probe))}};
  return r;
}

// P_{R+ w} + P_{R+ (-w)} is the projector of the line R w.
FixtureResult fx_two_rays(const SampleConfig& cfg) {
  FixtureResult r{"two-rays", "IsProjector", "", false, {}};
  Vector w = vec2(1, 1) / std::sqrt(2.0);
  SetDescriptor u = make_ray(w), v = make_ray(-w);
  Certificate cert = decide_pair_sum(u, v, cfg);
  r.observed = verdict_name(cert);
  double worst = 0.0;
  for (double a : {-2.0, -0.5, 0.0, 1.0, 3.0})
    for (double b : {-1.0, 0.0, 2.0}) {
      Vector x = vec2(a, b);
      Vector line = w * w.dot(x);
      worst = std::max(worst,
                       (project(u, x) + project(v, x) - line).norm());
    }
  r.match = cert.is_projector() && worst <= 1e-10;
  r.details = {{"certificate", to_json(cert)},
               {"max_deviation_from_line_projector", worst}};
  return r;
}

// Id - P_K - P_{{u}} is monotone, yet P_K + P_{{u}} is not a projector.
FixtureResult fx_counter_cone_set(const SampleConfig& cfg) {
  FixtureResult r{"counter-cone-set", "NotProjector", "", false, {}};
  SetDescriptor k = make_ray(vec2(1, 0));
  Vector u = vec2(2, 0);
  SetDescriptor su = make_singleton(u);
  Certificate cert = decide_pair_sum(su, k, cfg);
  r.observed = verdict_name(cert);
  auto kp = ptr(k);
  OperatorHandle t{[kp, u](const Vector& x) {
                     return Vector(x - project(*kp, x) - u);
                   },
                   2, "residual"};
  CheckReport mono = monotonicity_check(t, cfg);
  r.match = cert.verdict == Verdict::NotProjector && mono.pass;
  r.details = {{"certificate", to_json(cert)},
               {"residual_monotone", mono.pass},
               {"min_pairing", mono.min_pairing}};
  return r;
}

// Non-orthogonal rays: at x = (1,1), P_C x + P_K x = (1,0) != x although
// x lies in C + K.
FixtureResult fx_counter_cone_set2(const SampleConfig& cfg) {
  FixtureResult r{"counter-cone-set2", "NotProjector", "", false, {}};
  SetDescriptor c = make_ray(vec2(-1, 1));
  SetDescriptor k = make_ray(vec2(1, 0));
  Certificate cert = decide_pair_sum(c, k, cfg);
  r.observed = verdict_name(cert);
  Vector x = vec2(1, 1);
  Vector sum = project(c, x) + project(k, x);
  bool sum_matches_paper = (sum - vec2(1, 0)).norm() <= 1e-12;
  bool differs_from_x = (sum - x).norm() > 0.5;
  // x itself belongs to C + K, so the true sum-set projector fixes it
  bool x_in_sum = membership(make_minkowski_sum({c, k}), x, 1e-9);
  r.match = cert.verdict == Verdict::NotProjector && sum_matches_paper &&
            differs_from_x && x_in_sum;
  r.details = {{"certificate", to_json(cert)},
               {"witness_x", vec_to_json(x)},
               {"sum_at_x", vec_to_json(sum)},
               {"x_in_sum_set", x_in_sum}};
  return r;
}

// u + P_C is a projector exactly when u lies in (C - C)^perp.
FixtureResult fx_shifted_projector(const SampleConfig& cfg) {
  FixtureResult r{"shifted-projector", "IsProjector+NotProjector", "", false,
                  {}};
  SetDescriptor c = make_box(vec2(0, 0), vec2(1, 0));  // segment on axis 1
  Certificate good =
      decide_pair_sum(make_singleton(vec2(0, 3)), c, cfg);
  Certificate bad = decide_pair_sum(make_singleton(vec2(3, 0)), c, cfg);
  r.observed = verdict_name(good) + "+" + verdict_name(bad);
  r.match = good.is_projector() && bad.verdict == Verdict::NotProjector;
  r.details = {{"orthogonal_shift", to_json(good)},
               {"parallel_shift", to_json(bad)}};
  return r;
}

// The 4-term family certifies while the sub-family [{z}, R+ w] does not.
FixtureResult fx_partial_sum_fails(const SampleConfig& cfg) {
  FixtureResult r{"partial-sum-fails", "IsProjector+NotProjector", "", false,
                  {}};
  Vector w = vec2(1, 0), z = vec2(1, 1);
  Combination family{{{1.0, make_ray(w)},
                      {1.0, make_ray(-w)},
                      {1.0, make_singleton(z)},
                      {1.0, make_singleton(-z)}}};
  Certificate whole = decide_linear_combination(family, cfg);
  Certificate sub =
      decide_pair_sum(make_singleton(z), make_ray(w), cfg);
  r.observed = verdict_name(whole) + "+" + verdict_name(sub);
  r.match = whole.is_projector() && sub.verdict == Verdict::NotProjector;
  r.details = {{"family", to_json(whole)}, {"sub_family", to_json(sub)}};
  return r;
}

// Interval pairs: singletons sum; nondegenerate pairs need C cap D = {0}.
FixtureResult fx_1d_dichotomy(const SampleConfig& cfg) {
  (void)cfg;
  FixtureResult r{"1d-dichotomy", "IsProjector+NotProjector+IsProjector", "",
                  false, {}};
  Certificate a =
      decide_1d_pair(make_interval(-2, 0), make_interval(0, 3));
  Certificate b = decide_1d_pair(make_interval(0, 1), make_interval(0, 1));
  Certificate c = decide_1d_pair(make_interval(5, 5), make_interval(-1, -1));
  r.observed =
      verdict_name(a) + "+" + verdict_name(b) + "+" + verdict_name(c);
  bool sum_ok = false;
  if (a.result_set) {
    auto [lo, hi] = interval_of(*a.result_set);
    sum_ok = lo == -2 && hi == 3;
  }
  bool singleton_ok = false;
  if (c.result_set)
    if (auto p = singleton_point(*c.result_set))
      singleton_ok = (*p)[0] == 4.0;
  r.match = a.is_projector() && sum_ok &&
            b.verdict == Verdict::NotProjector && c.is_projector() &&
            singleton_ok;
  r.details = {{"disjoint_at_zero", to_json(a)},
               {"overlapping", to_json(b)},
               {"singletons", to_json(c)}};
  return r;
}

}  // namespace

nlohmann::json FixtureResult::to_json() const {
  return {{"fixture", name},
          {"expected", expected},
          {"observed", observed},
          {"match", match},
          {"details", details}};
}

std::vector<std::string> fixture_names() {
  return {"counter-sum",       "two-rays",         "counter-cone-set",
          "counter-cone-set2", "shifted-projector", "partial-sum-fails",
          "1d-dichotomy"};
}

FixtureResult run_fixture(const std::string& name, const SampleConfig& cfg) {
  if (name == "counter-sum") return fx_counter_sum(cfg);
  if (name == "two-rays") return fx_two_rays(cfg);
  if (name == "counter-cone-set") return fx_counter_cone_set(cfg);
  if (name == "counter-cone-set2") return fx_counter_cone_set2(cfg);
  if (name == "shifted-projector") return fx_shifted_projector(cfg);
  if (name == "partial-sum-fails") return fx_partial_sum_fails(cfg);
  if (name == "1d-dichotomy") return fx_1d_dichotomy(cfg);
  throw UnknownFixture("unknown fixture: " + name);
}

}  // namespace projcert
