#include "projcert/checks.hpp"

#include <cmath>

#include "projcert/errors.hpp"
#include "projcert/json_util.hpp"
#include "projcert/project.hpp"
#include "projcert/sampling.hpp"

namespace projcert {

OperatorHandle projector_handle(const SetDescriptor& s) {
  auto sp = ptr(s);
  return {[sp](const Vector& x) { return project(*sp, x); }, dimension(s),
          "projector"};
}

OperatorHandle combination_handle(const Combination& c) {
  auto cp = std::make_shared<const Combination>(c);
  return {[cp](const Vector& x) { return cp->apply(x); }, c.dimension(),
          "combination"};
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& [a, b] : witnesses)
    w.push_back({{"a", vec_to_json(a)}, {"b", vec_to_json(b)}});
  return {{"check", check},          {"pass", pass},
          {"max_error", max_error},  {"min_pairing", min_pairing},
          {"n_samples", n_samples},  {"seed", seed},
          {"fd_step", fd_step},      {"witnesses", w}};
}

namespace {

// True when x +- h*e straddles a kink of T: the centered second difference
// of a piecewise-smooth projector is O(h^2) inside a smooth piece but O(h)
// across an active-face change.
bool straddles_kink(const OperatorHandle& T, const Vector& tx,
                    const Vector& xp, const Vector& xm, double h) {
  Vector second = T(xp) - 2.0 * tx + T(xm);
  return second.norm() > 100.0 * h * h;
}

double envelope_fd_error(const std::function<double(const Vector&)>& f,
                         const std::function<Vector(const Vector&)>& grad,
                         const Vector& x, const Vector& dir, double h) {
  double fd = (f(x + h * dir) - f(x - h * dir)) / (2.0 * h);
  return std::abs(fd - grad(x).dot(dir));
}

std::vector<Vector> fd_directions(int n, Sampler& sampler) {
  std::vector<Vector> dirs;
  for (int i = 0; i < n; ++i) dirs.push_back(Vector::Unit(n, i));
  for (int i = 0; i < 8; ++i) {
    Vector d = sampler.gaussian();
    double nd = d.norm();
    if (nd > 1e-12) dirs.push_back(d / nd);
  }
  return dirs;
}

}  // namespace

CheckReport gradient_criterion_check(const OperatorHandle& T,
                                     const SampleConfig& cfg) {
  cfg.validate();
  const int n = T.dimension;
  const double h = cfg.fd_step;
  Sampler sampler(cfg, n);
  auto dirs = fd_directions(n, sampler);

  auto f = [&](const Vector& x) { return 0.5 * (x - T(x)).squaredNorm(); };

  CheckReport rep;
  rep.check = "gradient_criterion";
  rep.n_samples = cfg.n_samples;
  rep.seed = cfg.seed;
  rep.fd_step = h;

  for (int i = 0; i < cfg.n_samples; ++i) {
    Vector x;
    Vector tx;
    bool clean = false;
    for (int attempt = 0; attempt < 64 && !clean; ++attempt) {
      x = cfg.scale * sampler.gaussian();
      tx = T(x);
      clean = true;
      for (const auto& d : dirs)
        if (straddles_kink(T, tx, x + h * d, x - h * d, h)) {
          clean = false;
          break;
        }
    }
    Vector g = x - tx;
    for (const auto& d : dirs) {
      double fd = (f(x + h * d) - f(x - h * d)) / (2.0 * h);
      double err = std::abs(fd - g.dot(d));
      if (err > rep.max_error) rep.max_error = err;
    }
  }
  rep.pass = rep.max_error <= 1e-5 * (h / 1e-4) * (h / 1e-4) *
                                 std::max(1.0, cfg.scale * cfg.scale);
  return rep;
}

CheckReport monotonicity_check(const OperatorHandle& T,
                               const SampleConfig& cfg) {
  cfg.validate();
  const int n = T.dimension;
  Sampler sampler(cfg, n);

  CheckReport rep;
  rep.check = "monotonicity";
  rep.n_samples = cfg.n_samples;
  rep.seed = cfg.seed;
  rep.fd_step = cfg.fd_step;
  rep.min_pairing = std::numeric_limits<double>::infinity();

  Vector wa, wb;
  auto consider = [&](const Vector& x, const Vector& y) {
    double p = (T(x) - T(y)).dot(x - y);
    if (p < rep.min_pairing) {
      rep.min_pairing = p;
      wa = x;
      wb = y;
    }
  };

  const Vector zero = Vector::Zero(n);
  for (int i = 0; i < n; ++i) consider(zero, cfg.scale * Vector::Unit(n, i));
  Vector prev = cfg.scale * sampler.gaussian();
  for (int i = 0; i < cfg.n_samples; ++i) {
    Vector x = cfg.scale * sampler.gaussian();
    consider(prev, x);
    prev = x;
  }
  rep.pass = rep.min_pairing >= -cfg.atol;
  if (!rep.pass) rep.witnesses.emplace_back(wa, wb);
  return rep;
}

CheckReport firm_nonexpansiveness_check(const OperatorHandle& T,
                                        const SampleConfig& cfg) {
  cfg.validate();
  Sampler sampler(cfg, T.dimension);

  CheckReport rep;
  rep.check = "firm_nonexpansiveness";
  rep.n_samples = cfg.n_samples;
  rep.seed = cfg.seed;
  rep.fd_step = cfg.fd_step;
  rep.min_pairing = std::numeric_limits<double>::infinity();

  Vector wa, wb;
  Vector prev = cfg.scale * sampler.gaussian();
  for (int i = 0; i < cfg.n_samples; ++i) {
    Vector x = cfg.scale * sampler.gaussian();
    Vector dt = T(x) - T(prev);
    double slack = dt.dot(x - prev) - dt.squaredNorm();
    if (slack < rep.min_pairing) {
      rep.min_pairing = slack;
      wa = x;
      wb = prev;
    }
    prev = x;
  }
  rep.pass = rep.min_pairing >= -1e-10 * std::max(1.0, cfg.scale * cfg.scale);
  if (!rep.pass) rep.witnesses.emplace_back(wa, wb);
  return rep;
}

CheckReport homogeneity_check(const OperatorHandle& T,
                              const SampleConfig& cfg) {
  cfg.validate();
  Sampler sampler(cfg, T.dimension);

  CheckReport rep;
  rep.check = "homogeneity";
  rep.n_samples = cfg.n_samples;
  rep.seed = cfg.seed;
  rep.fd_step = cfg.fd_step;

  Vector wa, wb;
  const double lambdas[] = {0.25, 1.0, 4.0};
  for (int i = 0; i < cfg.n_samples; ++i) {
    Vector x = cfg.scale * sampler.gaussian();
    Vector tx = T(x);
    for (double lam : lambdas) {
      Vector lhs = T(lam * x);
      double err = (lhs - lam * tx).norm() /
                   (1.0 + lam * tx.norm());
      if (err > rep.max_error) {
        rep.max_error = err;
        wa = x;
        wb = lam * x;
      }
    }
  }
  rep.pass = rep.max_error <= cfg.atol + cfg.rtol;
  if (rep.pass) {
    // positively homogeneous monotone maps must fix 0
    if (monotonicity_check(T, cfg).pass) {
      double t0 = T(Vector::Zero(T.dimension)).norm();
      if (t0 > cfg.atol) {
        rep.pass = false;
        rep.max_error = std::max(rep.max_error, t0);
        wa = Vector::Zero(T.dimension);
        wb = wa;
      }
    }
  }
  if (!rep.pass) rep.witnesses.emplace_back(wa, wb);
  return rep;
}

nlohmann::json IdentityReport::to_json() const {
  return {{"check", "identity_suite"},
          {"pass", pass},
          {"norm_expansion", norm_expansion},
          {"cross_terms", cross_terms},
          {"envelope_expansion", envelope_expansion}};
}

IdentityReport identity_suite(const std::vector<Vector>& points,
                              const Combination& comb) {
  comb.validate();
  const auto q = [](const Vector& v) { return 0.5 * v.squaredNorm(); };
  const std::size_t m = comb.terms.size();
  const double alpha = comb.alpha();
  bool all_unit = true;
  for (const auto& [ai, s] : comb.terms)
    if (ai != 1.0) all_unit = false;

  IdentityReport rep;
  for (const Vector& x : points) {
    std::vector<Vector> xi;
    xi.reserve(m);
    for (const auto& [ai, s] : comb.terms) xi.push_back(project(s, x));

    Vector combo = Vector::Zero(x.size());
    for (std::size_t i = 0; i < m; ++i)
      combo += comb.terms[i].first * xi[i];

    double pair_sum = 0.0;  // sum_ij alpha_i alpha_j q(x_i - x_j)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        pair_sum +=
            comb.terms[i].first * comb.terms[j].first * q(xi[i] - xi[j]);

    // weighted norm-expansion identity
    double lhs = (x - combo).squaredNorm();
    double rhs = (1.0 - alpha) * x.squaredNorm();
    for (std::size_t i = 0; i < m; ++i) {
      rhs += comb.terms[i].first * (x - xi[i]).squaredNorm();
      rhs += (alpha - 1.0) * comb.terms[i].first * xi[i].squaredNorm();
    }
    rhs -= pair_sum;
    rep.norm_expansion = std::max(rep.norm_expansion, std::abs(lhs - rhs));

    // cross-term identity (unit coefficients)
    if (all_unit) {
      double l2 = 0.0, r2 = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        l2 += (alpha - 1.0) * xi[i].squaredNorm();
        for (std::size_t j = 0; j < m; ++j) {
          l2 -= 0.5 * (xi[i] - xi[j]).squaredNorm();
          if (i != j) r2 += xi[i].dot(xi[j]);
        }
      }
      rep.cross_terms = std::max(rep.cross_terms, std::abs(l2 - r2));
    }

    // envelope expansion
    double le = q(x - combo);
    double re = -(alpha - 1.0) * q(x);
    for (std::size_t i = 0; i < m; ++i) {
      re += 0.5 * comb.terms[i].first * (x - xi[i]).squaredNorm();
      re += (alpha - 1.0) * comb.terms[i].first * q(xi[i]);
    }
    re -= 0.5 * pair_sum;
    rep.envelope_expansion =
        std::max(rep.envelope_expansion, std::abs(le - re));
  }
  rep.pass = rep.norm_expansion <= 1e-9 && rep.cross_terms <= 1e-9 &&
             rep.envelope_expansion <= 1e-9;
  return rep;
}

PhiSpec PhiSpec::indicator(SetDescriptor s) {
  PhiSpec p;
  p.kind = Kind::Indicator;
  p.set = std::move(s);
  return p;
}

PhiSpec PhiSpec::l1(double lambda) {
  if (!(lambda > 0)) throw UnsupportedFunction("l1 weight must be positive");
  return {Kind::L1, std::nullopt, lambda};
}

PhiSpec PhiSpec::l2(double lambda) {
  if (!(lambda > 0)) throw UnsupportedFunction("l2 weight must be positive");
  return {Kind::L2, std::nullopt, lambda};
}

Vector PhiSpec::prox(const Vector& x) const {
  switch (kind) {
    case Kind::Indicator:
      return project(*set, x);
    case Kind::L1: {  // soft threshold
      Vector y(x.size());
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        double m = std::abs(x[i]) - lambda;
        y[i] = m > 0 ? (x[i] > 0 ? m : -m) : 0.0;
      }
      return y;
    }
    case Kind::L2: {  // block shrinkage
      double nx = x.norm();
      if (nx <= lambda) return Vector::Zero(x.size());
      return (1.0 - lambda / nx) * x;
    }
  }
  throw UnsupportedFunction("unknown phi");
}

double PhiSpec::value(const Vector& x) const {
  switch (kind) {
    case Kind::Indicator:
      return 0.0;  // evaluated only at prox outputs, which lie in the set
    case Kind::L1:
      return lambda * x.cwiseAbs().sum();
    case Kind::L2:
      return lambda * x.norm();
  }
  throw UnsupportedFunction("unknown phi");
}

CheckReport moreau_envelope_check(const PhiSpec& phi, int dim,
                                  const SampleConfig& cfg) {
  cfg.validate();
  Sampler sampler(cfg, dim);
  auto dirs = fd_directions(dim, sampler);
  const double h = cfg.fd_step;

  auto env = [&](const Vector& x) {
    Vector p = phi.prox(x);
    return phi.value(p) + 0.5 * (x - p).squaredNorm();
  };
  auto handle = OperatorHandle{
      [&phi](const Vector& x) { return phi.prox(x); }, dim, "prox"};

  CheckReport rep;
  rep.check = "moreau_envelope";
  rep.n_samples = cfg.n_samples;
  rep.seed = cfg.seed;
  rep.fd_step = h;

  for (int i = 0; i < cfg.n_samples; ++i) {
    Vector x;
    Vector px;
    bool clean = false;
    for (int attempt = 0; attempt < 64 && !clean; ++attempt) {
      x = cfg.scale * sampler.gaussian();
      px = phi.prox(x);
      clean = true;
      for (const auto& d : dirs)
        if (straddles_kink(handle, px, x + h * d, x - h * d, h)) {
          clean = false;
          break;
        }
    }
    Vector g = x - px;
    for (const auto& d : dirs) {
      double fd = (env(x + h * d) - env(x - h * d)) / (2.0 * h);
      double err = std::abs(fd - g.dot(d));
      if (err > rep.max_error) rep.max_error = err;
    }
  }
  rep.pass = rep.max_error <= 1e-5 * std::max(1.0, cfg.scale * cfg.scale);
  return rep;
}

void SampleConfig::validate() const {
  if (n_samples < 1) throw InvalidDescriptor("n_samples must be >= 1");
  if (!(scale > 0) || !std::isfinite(scale))
    throw InvalidDescriptor("scale must be positive and finite");
  if (!(fd_step > 0) || fd_step > 1e-2)
    throw InvalidDescriptor("fd_step must lie in (0, 1e-2]");
  if (!(atol >= 0) || !(rtol >= 0) || !std::isfinite(atol) ||
      !std::isfinite(rtol))
    throw InvalidDescriptor("tolerances must be nonnegative and finite");
}

}  // namespace projcert
