#include "projcert/oracle.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "projcert/errors.hpp"
#include "projcert/project.hpp"
#include "linalg.hpp"

namespace projcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Vector project_ray_dir(const Vector& unit_dir, const Vector& y) {
  return std::max(y.dot(unit_dir), 0.0) * unit_dir;
}

}  // namespace

bool oracle_member(const SetDescriptor& s, const Vector& y, double tol) {
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Singleton>)
          return (y - d.u).norm() <= tol;
        else if constexpr (std::is_same_v<T, Ball>)
          return (y - d.center).norm() <= d.radius + tol;
        else if constexpr (std::is_same_v<T, Box>) {
          for (Eigen::Index i = 0; i < y.size(); ++i)
            if (y[i] < d.lower[i] - tol || y[i] > d.upper[i] + tol)
              return false;
          return true;
        } else if constexpr (std::is_same_v<T, Hyperplane>)
          return std::abs(d.normal.dot(y) - d.offset) <=
                 tol * d.normal.norm();
        else if constexpr (std::is_same_v<T, Halfspace>)
          return d.normal.dot(y) - d.offset <= tol * d.normal.norm();
        else if constexpr (std::is_same_v<T, Subspace>)
          return detail::off_span_norm(d.basis, y) <= tol;
        else if constexpr (std::is_same_v<T, Ray>) {
          double t = y.dot(d.direction);
          return t >= -tol &&
                 (y - std::max(t, 0.0) * d.direction).norm() <= tol;
        } else if constexpr (std::is_same_v<T, FinitelyGeneratedCone>) {
          Vector p = Vector::Zero(y.size());
          for (const auto& g : d.generators) p += project_ray_dir(g, y);
          return (y - p).norm() <= tol;
        } else if constexpr (std::is_same_v<T, PolarCone>) {
          SetDescriptor red = polar_of(*d.of);
          if (const auto* pc = std::get_if<PolarCone>(&red.v)) {
            if (const auto* fg =
                    std::get_if<FinitelyGeneratedCone>(&pc->of->v)) {
              for (const auto& g : fg->generators)
                if (y.dot(g) > tol) return false;
              return true;
            }
            if (const auto* ms = std::get_if<MinkowskiSum>(&pc->of->v)) {
              // polar of a sum of cones is the intersection of the polars
              for (const auto& p : ms->parts)
                if (!oracle_member(polar_of(*p), y, tol)) return false;
              return true;
            }
            throw NotSupported("no direct membership test for this polar");
          }
          return oracle_member(red, y, tol);
        } else if constexpr (std::is_same_v<T, TruncatedCone>)
          return y.norm() <= d.radius + tol && oracle_member(*d.cone, y, tol);
        else if constexpr (std::is_same_v<T, Translate>)
          return oracle_member(*d.base, Vector(y - d.shift), tol);
        else if constexpr (std::is_same_v<T, ConeIntersection>)
          return oracle_member(*d.k1, y, tol) && oracle_member(*d.k2, y, tol);
        else
          throw NotSupported("no direct membership test for this variant");
      },
      s.v);
}

namespace {

// Affine parametrization of the search region: y = origin + map * theta,
// theta in [lo, hi], optionally filtered by a feasibility predicate whose
// tolerance follows the current grid spacing.
struct ParamSpace {
  Vector origin;
  Matrix map;
  Vector lo, hi;
  std::function<bool(const Vector& y, double ftol)> feasible;
  // strictly feasible theta for the predicate (box bounds excluded):
  // enables exact boundary repair instead of a feasibility band
  std::optional<Vector> slater;
};

ParamSpace ambient_box(const Vector& x0, int n, double w) {
  ParamSpace p;
  p.origin = Vector::Zero(n);
  p.map = Matrix::Identity(n, n);
  p.lo = Vector::Constant(n, -w);
  p.hi = Vector::Constant(n, w);
  (void)x0;
  return p;
}

ParamSpace build_param(const SetDescriptor& s, double w) {
  const int n = dimension(s);
  return std::visit(
      [&](const auto& d) -> ParamSpace {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Singleton>) {
          ParamSpace p;
          p.origin = d.u;
          p.map = Matrix(n, 0);
          p.lo = Vector(0);
          p.hi = Vector(0);
          return p;
        } else if constexpr (std::is_same_v<T, Ball>) {
          ParamSpace p = ambient_box(d.center, n, 0);
          p.lo = d.center.array() - d.radius;
          p.hi = d.center.array() + d.radius;
          p.feasible = [d](const Vector& y, double ftol) {
            return (y - d.center).norm() <= d.radius + ftol;
          };
          p.slater = d.center;
          return p;
        } else if constexpr (std::is_same_v<T, Box>) {
          ParamSpace p = ambient_box(Vector::Zero(n), n, w);
          for (int i = 0; i < n; ++i) {
            p.lo[i] = std::max(d.lower[i], -w);
            p.hi[i] = std::min(d.upper[i], w);
            if (p.lo[i] > p.hi[i])
              p.lo[i] = p.hi[i] =
                  std::isfinite(d.lower[i]) ? d.lower[i] : d.upper[i];
          }
          return p;
        } else if constexpr (std::is_same_v<T, Hyperplane>) {
          ParamSpace p;
          Vector nh = d.normal / d.normal.norm();
          p.origin = (d.offset / d.normal.norm()) * nh;
          p.map = detail::complement(nh);
          p.lo = Vector::Constant(p.map.cols(), -w);
          p.hi = Vector::Constant(p.map.cols(), w);
          return p;
        } else if constexpr (std::is_same_v<T, Halfspace>) {
          ParamSpace p = ambient_box(Vector::Zero(n), n, w);
          Vector nh = d.normal / d.normal.norm();
          double b = d.offset / d.normal.norm();
          p.feasible = [nh, b](const Vector& y, double ftol) {
            return nh.dot(y) <= b + ftol;
          };
          p.slater = Vector((b - (1.0 + w)) * nh);
          return p;
        } else if constexpr (std::is_same_v<T, Subspace>) {
          ParamSpace p;
          p.origin = Vector::Zero(n);
          p.map = d.basis;
          p.lo = Vector::Constant(d.basis.cols(), -w);
          p.hi = Vector::Constant(d.basis.cols(), w);
          return p;
        } else if constexpr (std::is_same_v<T, Ray>) {
          ParamSpace p;
          p.origin = Vector::Zero(n);
          p.map = d.direction;
          p.lo = Vector::Constant(1, 0.0);
          p.hi = Vector::Constant(1, w);
          return p;
        } else if constexpr (std::is_same_v<T, FinitelyGeneratedCone>) {
          ParamSpace p;
          p.origin = Vector::Zero(n);
          p.map = detail::columns(d.generators, n);
          p.lo = Vector::Constant(p.map.cols(), 0.0);
          p.hi = Vector::Constant(p.map.cols(), w);
          return p;
        } else if constexpr (std::is_same_v<T, PolarCone>) {
          SetDescriptor red = polar_of(*d.of);
          if (std::holds_alternative<PolarCone>(red.v)) {
            // no closed-form polar: ambient grid filtered by membership
            ParamSpace p = ambient_box(Vector::Zero(n), n, w);
            auto sp = ptr(SetDescriptor{d});
            p.feasible = [sp](const Vector& y, double ftol) {
              return oracle_member(*sp, y, ftol);
            };
            if (const auto* fg = std::get_if<FinitelyGeneratedCone>(&d.of->v)) {
              Vector z = Vector::Zero(n);
              for (const auto& g : fg->generators) z -= g;
              if (z.norm() > 0 &&
                  p.feasible(z, -1e-9 * (1.0 + z.norm())))
                p.slater = z;
            }
            return p;
          }
          return build_param(red, w);
        } else if constexpr (std::is_same_v<T, TruncatedCone>) {
          ParamSpace p = build_param(*d.cone, std::min(w, d.radius));
          double rho = d.radius;
          auto inner = p.feasible;
          if (!inner && d.radius > 0)
            p.slater = Vector::Zero(p.map.cols());  // y(0) = 0, strictly inside
          p.feasible = [rho, inner](const Vector& y, double ftol) {
            if (y.norm() > rho + ftol) return false;
            return inner ? inner(y, ftol) : true;
          };
          return p;
        } else if constexpr (std::is_same_v<T, Translate>) {
          ParamSpace p = build_param(*d.base, w);
          Vector shift = d.shift;
          p.origin += shift;
          auto inner = p.feasible;
          if (inner)
            p.feasible = [shift, inner](const Vector& y, double ftol) {
              return inner(y - shift, ftol);
            };
          return p;
        } else if constexpr (std::is_same_v<T, MinkowskiSum>) {
          ParamSpace p;
          p.origin = Vector::Zero(n);
          Eigen::Index k = 0;
          std::vector<ParamSpace> parts;
          for (const auto& part : d.parts) {
            parts.push_back(build_param(*part, w));
            p.origin += parts.back().origin;
            k += parts.back().map.cols();
          }
          p.map = Matrix(n, k);
          p.lo = Vector(k);
          p.hi = Vector(k);
          Eigen::Index at = 0;
          for (const auto& ps : parts) {
            p.map.middleCols(at, ps.map.cols()) = ps.map;
            p.lo.segment(at, ps.map.cols()) = ps.lo;
            p.hi.segment(at, ps.map.cols()) = ps.hi;
            at += ps.map.cols();
          }
          // per-part feasibility needs the split theta; rebuild from y is
          // not possible, so sums restrict to predicate-free parts
          for (const auto& ps : parts)
            if (ps.feasible)
              throw NotSupported(
                  "grid oracle supports sums of predicate-free parts only");
          return p;
        } else if constexpr (std::is_same_v<T, ConeIntersection>) {
          ParamSpace p = ambient_box(Vector::Zero(n), n, w);
          auto k1 = d.k1;
          auto k2 = d.k2;
          p.feasible = [k1, k2](const Vector& y, double ftol) {
            return oracle_member(*k1, y, ftol) && oracle_member(*k2, y, ftol);
          };
          return p;
        } else {
          throw NotSupported("grid oracle does not handle this variant");
        }
      },
      s.v);
}

}  // namespace

Vector oracle_project(const SetDescriptor& s, const Vector& x,
                      double resolution, double scale) {
  if (!(resolution > 0)) throw InvalidDescriptor("resolution must be > 0");
  if (const auto* poly = std::get_if<Polytope>(&s.v))
    return frank_wolfe_project(poly->vertices, x,
                               std::min(resolution, 1e-6));
  if (auto p = singleton_point(s)) return *p;
  if (const auto* ci = std::get_if<ConeIntersection>(&s.v))
    return dykstra_project({*ci->k1, *ci->k2}, x, 200000, 1e-13);
  try {
    if (oracle_member(s, x, 1e-10)) return x;
  } catch (const NotSupported&) {
  }

  const double w = std::max(10.0 * scale, 2.0 * x.norm() + 1.0);
  ParamSpace ps = build_param(s, w);
  const Eigen::Index k = ps.map.cols();
  if (k == 0) return ps.origin;
  if (k > 3)
    throw UnsupportedDimension("grid oracle limited to 3 search dimensions");

  Vector center = 0.5 * (ps.lo + ps.hi);
  Vector halfw = 0.5 * (ps.hi - ps.lo);
  double spacing = halfw.maxCoeff();

  // Realize theta as a point of the set: exactly feasible points are kept
  // as-is; infeasible ones are repaired by bisecting toward the Slater
  // point. Band acceptance (loose ftol) is the fallback without one.
  const bool can_repair = ps.feasible && ps.slater;
  auto realize = [&](const Vector& theta, double ftol) -> std::optional<Vector> {
    Vector y = ps.origin + ps.map * theta;
    if (!ps.feasible) return y;
    double tight = 1e-12 * (1.0 + y.norm());
    if (ps.feasible(y, tight)) return y;
    if (!can_repair) {
      if (ps.feasible(y, ftol)) return y;
      return std::nullopt;
    }
    double lo = 0.0, hi = 1.0;  // theta(0) = slater feasible, theta(1) not
    Vector dir = theta - *ps.slater;
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      Vector ym = ps.origin + ps.map * (*ps.slater + mid * dir);
      (ps.feasible(ym, tight) ? lo : hi) = mid;
    }
    return Vector(ps.origin + ps.map * (*ps.slater + lo * dir));
  };

  Vector best_theta = center;
  Vector best_y = ps.origin + ps.map * center;
  double best_obj = kInf;

  auto sweep = [&](const Vector& c, const Vector& hw, int m, double ftol) {
    std::vector<int> idx(k, 0);
    Vector theta(k);
    while (true) {
      for (Eigen::Index j = 0; j < k; ++j) {
        double t = m == 1 ? 0.0 : -1.0 + 2.0 * idx[j] / double(m - 1);
        theta[j] = std::clamp(c[j] + t * hw[j], ps.lo[j], ps.hi[j]);
      }
      if (auto y = realize(theta, ftol)) {
        double obj = (*y - x).squaredNorm();
        if (obj < best_obj) {
          best_obj = obj;
          best_theta = theta;
          best_y = *y;
        }
      }
      Eigen::Index j = 0;
      while (j < k && ++idx[j] == m) idx[j++] = 0;
      if (j == k) break;
    }
  };

  // coarse pass; widen the feasibility band until something is found
  double ftol = spacing / 8.0 + 1e-12;
  for (int tries = 0; tries < 24 && best_obj == kInf; ++tries, ftol *= 4.0)
    sweep(center, halfw, 17, ftol);
  if (best_obj == kInf)
    throw DidNotConverge("grid oracle found no feasible point");

  double target =
      resolution / (2.0 * std::sqrt(double(k)) * std::max(1.0, ps.map.norm()));
  spacing = spacing / 8.0;
  while (spacing > target) {
    Vector c = best_theta;  // snapshot: sweep mutates best_theta
    Vector hw = Vector::Constant(k, spacing);
    if (!can_repair && ps.feasible) {
      // the incumbent may only be feasible up to the previous, looser
      // band; drop it and re-qualify under the tighter one
      best_obj = kInf;
      double f = spacing / 4.0 + 1e-12;
      for (int tries = 0; tries < 8 && best_obj == kInf; ++tries, f *= 4.0)
        sweep(c, hw, 9, f);
      if (best_obj == kInf) {
        best_theta = c;  // window emptied; keep the previous point
        break;
      }
    } else {
      sweep(c, hw, 9, 0.0);
    }
    spacing /= 4.0;
  }
  return best_y;
}

Vector frank_wolfe_project(const std::vector<Vector>& vertices,
                           const Vector& x, double tol, int max_iter) {
  if (vertices.empty())
    throw InvalidDescriptor("frank-wolfe needs at least one vertex");
  // pairwise variant: mass moves from the worst active vertex to the best
  // one, which avoids the zigzag that stalls plain conditional gradient
  const std::size_t m = vertices.size();
  std::vector<double> lambda(m, 0.0);
  lambda[0] = 1.0;
  Vector y = vertices.front();
  const double gap_target = 0.5 * tol * tol;
  for (int k = 0; k < max_iter; ++k) {
    Vector grad = y - x;
    std::size_t si = 0, ai = 0;
    double best = kInf, worst = -kInf;
    for (std::size_t i = 0; i < m; ++i) {
      double val = grad.dot(vertices[i]);
      if (val < best) {
        best = val;
        si = i;
      }
      if (lambda[i] > 0 && val > worst) {
        worst = val;
        ai = i;
      }
    }
    double gap = grad.dot(y) - best;
    if (gap <= gap_target) return y;
    Vector d = vertices[si] - vertices[ai];
    double dd = d.squaredNorm();
    if (dd == 0) return y;
    double g = std::clamp((x - y).dot(d) / dd, 0.0, lambda[ai]);
    if (g == 0) break;  // numerically pinned; final gap check decides
    lambda[si] += g;
    lambda[ai] -= g;
    y += g * d;
  }
  {
    Vector grad = y - x;
    double best = kInf;
    for (const auto& v : vertices) best = std::min(best, grad.dot(v));
    if (grad.dot(y) - best > gap_target)
      throw DidNotConverge("frank-wolfe iteration cap reached");
  }
  return y;
}

Vector dykstra_project(const std::vector<SetDescriptor>& sets, const Vector& x,
                       int max_iter, double tol) {
  if (sets.empty()) throw InvalidDescriptor("dykstra needs at least one set");
  const std::size_t m = sets.size();
  Vector z = x;
  std::vector<Vector> corr(m, Vector::Zero(x.size()));
  for (int it = 0; it < max_iter; ++it) {
    double change = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      Vector target = z + corr[i];
      Vector y = project(sets[i], target);
      corr[i] = target - y;
      change = std::max(change, (y - z).norm());
      z = y;
    }
    if (change <= tol * (1.0 + x.norm())) return z;
  }
  return z;
}

}  // namespace projcert
