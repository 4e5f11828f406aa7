#include <doctest.h>

#include <cmath>

#include "projcert/checks.hpp"
#include "projcert/errors.hpp"
#include "projcert/project.hpp"
#include "projcert/sampling.hpp"

using namespace projcert;

namespace {

Vector v2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

SampleConfig small_cfg() {
  SampleConfig cfg;
  cfg.n_samples = 64;
  return cfg;
}

}  // namespace

TEST_CASE("gradient criterion holds for projectors, fails for impostors") {
  SampleConfig cfg = small_cfg();
  for (const SetDescriptor& s :
       {make_ball(v2(0.5, -0.25), 1.5), make_box(v2(-1, 0), v2(1, 2)),
        make_ray(v2(1, 2)), make_halfspace(v2(1, 2), 0.7)}) {
    CheckReport r = gradient_criterion_check(projector_handle(s), cfg);
    CHECK(r.pass);
    CHECK(r.max_error <= 1e-5);
  }

  // 2 * P_ball is monotone but violates the gradient criterion
  SetDescriptor b = make_ball(Vector::Zero(2), 1.0);
  OperatorHandle doubled{
      [b](const Vector& x) { return Vector(2.0 * project(b, x)); }, 2,
      "2*P"};
  CHECK(!gradient_criterion_check(doubled, cfg).pass);
}

TEST_CASE("monotonicity and firm nonexpansiveness of projectors") {
  SampleConfig cfg = small_cfg();
  SetDescriptor s = make_box(v2(-1, 0), v2(1, 2));
  OperatorHandle t = projector_handle(s);
  CHECK(monotonicity_check(t, cfg).pass);
  CHECK(firm_nonexpansiveness_check(t, cfg).pass);

  // x -> -x is not monotone; the report carries a witness pair
  OperatorHandle neg{[](const Vector& x) { return Vector(-x); }, 2, "-Id"};
  CheckReport r = monotonicity_check(neg, cfg);
  CHECK(!r.pass);
  REQUIRE(!r.witnesses.empty());
  const auto& [a, b] = r.witnesses.front();
  CHECK((-a + b).dot(a - b) < -cfg.atol);  // violation reproduces
}

TEST_CASE("positive homogeneity holds exactly for cone projectors") {
  SampleConfig cfg = small_cfg();
  CHECK(homogeneity_check(projector_handle(make_ray(v2(1, 2))), cfg).pass);
  CHECK(homogeneity_check(
            projector_handle(make_generated_cone({v2(1, 0), v2(0, 1)})), cfg)
            .pass);
  // shifted set: projector is not positively homogeneous
  CHECK(!homogeneity_check(
             projector_handle(make_ball(v2(3, 0), 1.0)), cfg)
             .pass);
}

TEST_CASE("combination identities hold at projected points") {
  SampleConfig cfg = small_cfg();
  Combination comb{{{1.0, make_ray(v2(1, 0))}, {1.0, make_ray(v2(0, 1))}}};
  Sampler smp(cfg, 2);
  IdentityReport rep = identity_suite(smp.points(), comb);
  CHECK(rep.pass);
  CHECK(rep.norm_expansion <= 1e-9);
  CHECK(rep.cross_terms <= 1e-9);
  CHECK(rep.envelope_expansion <= 1e-9);
}

TEST_CASE("moreau envelope gradient equals Id minus prox") {
  SampleConfig cfg = small_cfg();
  CHECK(moreau_envelope_check(
            PhiSpec::indicator(make_ball(v2(0.5, -0.25), 1.5)), 2, cfg)
            .pass);
  CHECK(moreau_envelope_check(PhiSpec::l1(0.7), 3, cfg).pass);
  CHECK(moreau_envelope_check(PhiSpec::l2(1.3), 3, cfg).pass);
}

TEST_CASE("soft thresholding and shrinkage prox maps") {
  PhiSpec l1 = PhiSpec::l1(0.5);
  Vector x = v2(2.0, -0.2);
  Vector p = l1.prox(x);
  CHECK((p - v2(1.5, 0.0)).norm() < 1e-14);

  PhiSpec l2 = PhiSpec::l2(1.0);
  Vector q = l2.prox(v2(3, 4));  // norm 5 -> shrink by 1
  CHECK((q - v2(2.4, 3.2)).norm() < 1e-14);
  CHECK(l2.prox(v2(0.3, 0.4)).norm() == 0.0);  // inside: maps to zero
}

TEST_CASE("sample config validation") {
  SampleConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.n_samples = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidDescriptor);
  cfg = SampleConfig{};
  cfg.scale = -1.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidDescriptor);
  cfg = SampleConfig{};
  cfg.fd_step = 0.5;  // above the 1e-2 cap
  CHECK_THROWS_AS(cfg.validate(), InvalidDescriptor);
  cfg = SampleConfig{};
  cfg.atol = -1e-9;
  CHECK_THROWS_AS(cfg.validate(), InvalidDescriptor);
}

TEST_CASE("reports serialize with the evidence needed to re-run them") {
  SampleConfig cfg = small_cfg();
  CheckReport r =
      gradient_criterion_check(projector_handle(make_ray(v2(1, 2))), cfg);
  nlohmann::json j = r.to_json();
  CHECK(j.at("check").is_string());
  CHECK(j.at("pass").get<bool>());
  CHECK(j.at("seed").get<std::uint64_t>() == cfg.seed);
  CHECK(j.at("fd_step").get<double>() == cfg.fd_step);
}
