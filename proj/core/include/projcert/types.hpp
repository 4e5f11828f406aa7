#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace projcert {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Centralized tolerances: closed-form identities vs iterative solvers.
inline constexpr double kExactTol = 1e-10;
inline constexpr double kIterTol = 1e-6;

struct SampleConfig {
  std::uint64_t seed = 20240416;
  int n_samples = 512;
  double scale = 1.0;     // Gaussian std-dev for sampled points
  double atol = 1e-8;
  double rtol = 1e-8;
  double fd_step = 1e-4;  // central finite-difference step

  void validate() const;
};

}  // namespace projcert
