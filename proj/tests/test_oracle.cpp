#include <doctest.h>

#include <cmath>
#include <limits>

#include "projcert/checks.hpp"
#include "projcert/errors.hpp"
#include "projcert/oracle.hpp"
#include "projcert/project.hpp"
#include "projcert/sampling.hpp"

using namespace projcert;

namespace {

Vector v2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

double worst_oracle_gap(const SetDescriptor& s, double resolution,
                        int n_samples = 48) {
  SampleConfig cfg;
  cfg.n_samples = n_samples;
  Sampler smp(cfg, dimension(s));
  double worst = 0.0;
  for (const Vector& x : smp.points()) {
    Vector e = project(s, x);
    Vector a = oracle_project(s, x, resolution, cfg.scale);
    worst = std::max(worst, (e - a).norm());
  }
  return worst;
}

}  // namespace

TEST_CASE("grid oracle agrees with closed forms in 2-D") {
  const double thr = 2e-3 * std::sqrt(2.0);
  CHECK(worst_oracle_gap(make_ball(v2(0.5, -0.25), 1.5), 1e-3) < thr);
  CHECK(worst_oracle_gap(make_box(v2(-0.5, 0.25), v2(1.0, 2.0)), 1e-3) < thr);
  CHECK(worst_oracle_gap(make_hyperplane(v2(1, 2), 0.7), 1e-3) < thr);
  CHECK(worst_oracle_gap(make_halfspace(v2(1, 2), 0.7), 1e-3) < thr);
  CHECK(worst_oracle_gap(make_ray(v2(1, 2)), 1e-3) < thr);
  CHECK(worst_oracle_gap(make_truncated_cone(make_ray(v2(1, 1)), 1.0), 1e-3) <
        thr);
  CHECK(worst_oracle_gap(
            make_polar(make_generated_cone({v2(1, 0), v2(0, 1)})), 1e-3) <
        thr);
  CHECK(worst_oracle_gap(
            make_translate(make_ball(Vector::Zero(2), 1.0), v2(1, 2)),
            1e-3) < thr);
}

TEST_CASE("grid oracle rejects too many search dimensions") {
  Vector lo = Vector::Constant(5, -1.0), hi = Vector::Constant(5, 1.0);
  Vector x = Vector::Constant(5, 2.0);
  CHECK_THROWS_AS(oracle_project(make_box(lo, hi), x, 1e-3),
                  UnsupportedDimension);
}

TEST_CASE("frank-wolfe matches the exact polytope projection") {
  std::vector<Vector> verts = {v2(0, 0), v2(2, 0), v2(0, 2), v2(1.5, 1.5)};
  SetDescriptor poly = make_polytope(verts);
  SampleConfig cfg;
  cfg.n_samples = 48;
  cfg.scale = 2.0;
  Sampler smp(cfg, 2);
  for (const Vector& x : smp.points()) {
    Vector fw = frank_wolfe_project(verts, x, 1e-6);
    CHECK((fw - project(poly, x)).norm() < 1e-5);
  }
}

TEST_CASE("dykstra converges to the intersection projection") {
  // two boxes whose intersection is the unit box
  SetDescriptor a = make_box(v2(-2, 0), v2(1, 3));
  SetDescriptor b = make_box(v2(0, -1), v2(4, 1));
  SetDescriptor cap = make_box(v2(0, 0), v2(1, 1));
  SampleConfig cfg;
  cfg.n_samples = 48;
  cfg.scale = 2.0;
  Sampler smp(cfg, 2);
  for (const Vector& x : smp.points()) {
    Vector z = dykstra_project({a, b}, x);
    CHECK((z - project(cap, x)).norm() < 1e-8);
  }
}

TEST_CASE("oracle membership matches closed-form membership") {
  SampleConfig cfg;
  cfg.n_samples = 64;
  std::vector<SetDescriptor> sets = {
      make_ball(v2(0.5, -0.25), 1.5),
      make_box(v2(-0.5, 0.25), v2(1.0, 2.0)),
      make_halfspace(v2(1, 2), 0.7),
      make_ray(v2(1, 2)),
      make_generated_cone({v2(1, 0), v2(0, 1)}),
      make_polar(make_generated_cone({v2(1, 0), v2(0, 1)})),
  };
  for (const SetDescriptor& s : sets) {
    Sampler smp(cfg, 2);
    for (const Vector& x : smp.points()) {
      // interior/exterior classification; skip the boundary band
      double d = std::sqrt(distance_sq(s, x));
      if (d < 1e-6) continue;
      CHECK(!oracle_member(s, x, 1e-9));
      CHECK(oracle_member(s, project(s, x), 1e-9));
    }
  }
}

TEST_CASE("finite differences of the squared distance converge at order 2") {
  OperatorHandle t = projector_handle(make_ball(v2(0.5, -0.25), 1.5));
  SampleConfig coarse;
  coarse.n_samples = 16;
  coarse.fd_step = 1e-3;
  SampleConfig fine = coarse;
  fine.fd_step = 5e-4;
  double e_coarse = gradient_criterion_check(t, coarse).max_error;
  double e_fine = gradient_criterion_check(t, fine).max_error;
  CHECK(e_coarse < 1e-5 * (coarse.fd_step / 1e-4) * (coarse.fd_step / 1e-4));
  // halving the step shrinks the error by at least 3x (order ~ 2)
  CHECK(e_coarse >= 3.0 * e_fine);
}
