#include <benchmark/benchmark.h>

#include <random>

#include "projcert/decide.hpp"
#include "projcert/oracle.hpp"
#include "projcert/project.hpp"
#include "projcert/sampling.hpp"

using namespace projcert;

namespace {

Vector gaussian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = g(rng);
  return v;
}

void bm_project_ball(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  SetDescriptor s = make_ball(gaussian(n, rng), 1.5);
  Vector x = 2.0 * gaussian(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(project(s, x));
}
BENCHMARK(bm_project_ball)->Arg(4)->Arg(64)->Arg(1024);

void bm_project_box(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  Vector lo = gaussian(n, rng), hi = lo;
  for (int i = 0; i < n; ++i) hi[i] += 1.0;
  SetDescriptor s = make_box(lo, hi);
  Vector x = 2.0 * gaussian(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(project(s, x));
}
BENCHMARK(bm_project_box)->Arg(4)->Arg(64)->Arg(1024);

void bm_project_generated_cone(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  Matrix a(n, n / 2);
  for (int j = 0; j < a.cols(); ++j) a.col(j) = gaussian(n, rng);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = Matrix(qr.householderQ()).leftCols(n / 2);
  std::vector<Vector> gens;
  for (int j = 0; j < q.cols(); ++j) gens.push_back(q.col(j));
  SetDescriptor s = make_generated_cone(gens);
  Vector x = gaussian(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(project(s, x));
}
BENCHMARK(bm_project_generated_cone)->Arg(4)->Arg(16)->Arg(64);

void bm_project_polytope(benchmark::State& state) {
  int verts = static_cast<int>(state.range(0));
  std::mt19937_64 rng(4);
  std::vector<Vector> v;
  for (int j = 0; j < verts; ++j) v.push_back(gaussian(6, rng));
  SetDescriptor s = make_polytope(v);
  Vector x = 2.0 * gaussian(6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(project(s, x));
}
BENCHMARK(bm_project_polytope)->Arg(4)->Arg(8)->Arg(12);

void bm_frank_wolfe(benchmark::State& state) {
  int verts = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  std::vector<Vector> v;
  for (int j = 0; j < verts; ++j) v.push_back(gaussian(8, rng));
  Vector x = 2.0 * gaussian(8, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(frank_wolfe_project(v, x, 1e-6));
}
BENCHMARK(bm_frank_wolfe)->Arg(8)->Arg(32)->Arg(128);

void bm_oracle_project_ball(benchmark::State& state) {
  SetDescriptor s = make_ball(Vector::Zero(2), 1.0);
  Vector x(2);
  x << 1.7, -0.9;
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle_project(s, x, 1e-3, 1.0));
}
BENCHMARK(bm_oracle_project_ball);

void bm_decide_pair_sum(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Vector d1 = Vector::Unit(n, 0), d2 = Vector::Unit(n, 1);
  SetDescriptor c = make_ray(d1), d = make_ray(d2);
  SampleConfig cfg;
  cfg.n_samples = 256;
  for (auto _ : state) benchmark::DoNotOptimize(decide_pair_sum(c, d, cfg));
}
BENCHMARK(bm_decide_pair_sum)->Arg(2)->Arg(16)->Arg(64);

void bm_decide_cone_family(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  std::vector<SetDescriptor> fam;
  for (int j = 0; j < m; ++j) fam.push_back(make_ray(Vector::Unit(8, j)));
  SampleConfig cfg;
  cfg.n_samples = 128;
  for (auto _ : state)
    benchmark::DoNotOptimize(decide_cone_family_sum(fam, cfg));
}
BENCHMARK(bm_decide_cone_family)->Arg(2)->Arg(4)->Arg(8);

void bm_dykstra(benchmark::State& state) {
  Vector n1 = Vector::Unit(4, 0), n2 = Vector::Unit(4, 1);
  std::vector<SetDescriptor> sets = {make_halfspace(n1, 0.0),
                                     make_halfspace(n2, 0.0)};
  std::mt19937_64 rng(6);
  Vector x = gaussian(4, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(dykstra_project(sets, x, 100000, 1e-12));
}
BENCHMARK(bm_dykstra);

}  // namespace

BENCHMARK_MAIN();
