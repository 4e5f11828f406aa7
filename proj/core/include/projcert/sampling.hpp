#pragma once

#include <random>
#include <vector>

#include "projcert/types.hpp"

namespace projcert {

// Deterministic probe points followed by seeded Gaussian draws; every
// sampled test consumes points in this fixed order so identical configs
// produce identical reports.
class Sampler {
 public:
  Sampler(const SampleConfig& cfg, int dim)
      : cfg_(cfg), dim_(dim), rng_(cfg.seed) {}

  Vector gaussian() {
    Vector x(dim_);
    for (int i = 0; i < dim_; ++i) x[i] = gauss_(rng_);
    return x;
  }

  // 0, +-scale*e_i, +-scale*(1,...,1), then n_samples Gaussian points.
  std::vector<Vector> points() {
    std::vector<Vector> pts;
    pts.reserve(static_cast<std::size_t>(cfg_.n_samples) + 2 * dim_ + 3);
    pts.push_back(Vector::Zero(dim_));
    for (int i = 0; i < dim_; ++i) pts.push_back(cfg_.scale * Vector::Unit(dim_, i));
    for (int i = 0; i < dim_; ++i) pts.push_back(-cfg_.scale * Vector::Unit(dim_, i));
    pts.push_back(cfg_.scale * Vector::Ones(dim_));
    pts.push_back(-cfg_.scale * Vector::Ones(dim_));
    for (int i = 0; i < cfg_.n_samples; ++i) pts.push_back(cfg_.scale * gaussian());
    return pts;
  }

  std::mt19937_64& rng() { return rng_; }
  const SampleConfig& config() const { return cfg_; }
  int dim() const { return dim_; }

 private:
  SampleConfig cfg_;
  int dim_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

}  // namespace projcert
