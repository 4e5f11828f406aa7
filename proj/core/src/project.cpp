#include "projcert/project.hpp"

#include <cmath>
#include <limits>

#include "projcert/errors.hpp"
#include "linalg.hpp"

namespace projcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_dim(const SetDescriptor& s, const Vector& x) {
  if (dimension(s) != x.size())
    throw DimensionMismatch("point dimension does not match set dimension");
}

// Pairwise orthogonal-or-antipodal with at most one antipodal partner each;
// the regime where the sum of ray projectors is the cone projector.
bool generators_pairwise_ok(const std::vector<Vector>& gens, double tol) {
  const std::size_t m = gens.size();
  std::vector<int> antipodal(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      double ip = gens[i].dot(gens[j]);  // unit vectors
      if (std::abs(ip) <= tol) continue;
      if (std::abs(ip + 1.0) <= tol &&
          (gens[i] + gens[j]).norm() <= 1e-8) {
        ++antipodal[i];
        ++antipodal[j];
        continue;
      }
      return false;
    }
  for (std::size_t i = 0; i < m; ++i)
    if (antipodal[i] > 1) return false;
  return true;
}

Vector project_ray(const Vector& unit_dir, const Vector& x) {
  return std::max(x.dot(unit_dir), 0.0) * unit_dir;
}

// Exact projection onto a convex hull: enumerate vertex supports and solve
// the equality-constrained least-squares on each; the best nonnegative
// solution is the projection (the optimal face's support always qualifies).
Vector project_polytope(const std::vector<Vector>& verts, const Vector& x) {
  const int m = static_cast<int>(verts.size());
  if (m > 16)
    throw NotSupported("exact polytope projection limited to 16 vertices");
  const Eigen::Index n = x.size();
  double best = kInf;
  Vector best_y = verts.front();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    Matrix v(n, k);
    for (int i = 0; i < k; ++i) v.col(i) = verts[idx[i]];
    // KKT system for min ||v*lam - x||^2 s.t. sum(lam) = 1
    Matrix kkt(k + 1, k + 1);
    kkt.topLeftCorner(k, k) = 2.0 * v.transpose() * v;
    kkt.topRightCorner(k, 1).setOnes();
    kkt.bottomLeftCorner(1, k).setOnes();
    kkt(k, k) = 0.0;
    Vector rhs(k + 1);
    rhs.head(k) = 2.0 * v.transpose() * x;
    rhs[k] = 1.0;
    Vector sol = kkt.completeOrthogonalDecomposition().solve(rhs);
    Vector lam = sol.head(k);
    if ((kkt * sol - rhs).norm() > 1e-8) continue;  // inconsistent support
    if (lam.minCoeff() < -1e-10) continue;
    Vector y = v * lam;
    double obj = (y - x).squaredNorm();
    if (obj < best) {
      best = obj;
      best_y = y;
    }
  }
  return best_y;
}

// Cyclic block minimization of ||sum c_i - x||^2 with c_i in part i;
// exact in a few sweeps for the certified (orthogonal) constructions.
Vector project_minkowski_sum(const MinkowskiSum& ms, const Vector& x) {
  const std::size_t m = ms.parts.size();
  std::vector<Vector> c(m, Vector::Zero(x.size()));
  Vector total = Vector::Zero(x.size());
  for (int sweep = 0; sweep < 10000; ++sweep) {
    double change = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      Vector target = x - (total - c[i]);
      Vector next = project(*ms.parts[i], target);
      change = std::max(change, (next - c[i]).norm());
      total += next - c[i];
      c[i] = next;
    }
    if (change <= 1e-13 * (1.0 + x.norm())) return total;
  }
  return total;  // best effort; accuracy asserted by callers' tolerances
}

}  // namespace

Vector project(const SetDescriptor& s, const Vector& x) {
  check_dim(s, x);
  if (!x.allFinite())
    throw InvalidDescriptor("projection argument must be finite");
  return std::visit(
      [&x](const auto& d) -> Vector {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Singleton>)
          return d.u;
        else if constexpr (std::is_same_v<T, Ball>) {
          Vector r = x - d.center;
          double nr = r.norm();
          if (nr <= d.radius) return x;
          return d.center + (d.radius / nr) * r;
        } else if constexpr (std::is_same_v<T, Box>)
          return x.cwiseMax(d.lower).cwiseMin(d.upper);
        else if constexpr (std::is_same_v<T, Hyperplane>)
          return x - ((d.normal.dot(x) - d.offset) / d.normal.squaredNorm()) *
                         d.normal;
        else if constexpr (std::is_same_v<T, Halfspace>) {
          double slack = d.normal.dot(x) - d.offset;
          if (slack <= 0) return x;
          return x - (slack / d.normal.squaredNorm()) * d.normal;
        } else if constexpr (std::is_same_v<T, Subspace>)
          return d.basis.cols() == 0
                     ? Vector(Vector::Zero(x.size()))
                     : Vector(d.basis * (d.basis.transpose() * x));
        else if constexpr (std::is_same_v<T, Ray>)
          return project_ray(d.direction, x);
        else if constexpr (std::is_same_v<T, FinitelyGeneratedCone>) {
          if (!generators_pairwise_ok(d.generators, 1e-10))
            throw UnsupportedExactProjection(
                "generators are not pairwise orthogonal or antipodal");
          Vector y = Vector::Zero(x.size());
          for (const auto& g : d.generators) y += project_ray(g, x);
          return y;
        } else if constexpr (std::is_same_v<T, PolarCone>)
          return x - project(*d.of, x);  // Moreau decomposition
        else if constexpr (std::is_same_v<T, TruncatedCone>) {
          Vector p = project(*d.cone, x);
          return (d.radius / std::max(p.norm(), d.radius)) * p;
        } else if constexpr (std::is_same_v<T, Translate>)
          return d.shift + project(*d.base, Vector(x - d.shift));
        else if constexpr (std::is_same_v<T, MinkowskiSum>)
          return project_minkowski_sum(d, x);
        else if constexpr (std::is_same_v<T, Polytope>)
          return project_polytope(d.vertices, x);
        else
          // certified intersection of cones: P1 + P2 - Id
          return project(*d.k1, x) + project(*d.k2, x) - x;
      },
      s.v);
}

double distance_sq(const SetDescriptor& s, const Vector& x) {
  return (x - project(s, x)).squaredNorm();
}

bool membership(const SetDescriptor& s, const Vector& x, double tol) {
  return distance_sq(s, x) <= tol * tol;
}

Vector sample_point(const SetDescriptor& s, std::mt19937_64& rng,
                    double scale) {
  std::normal_distribution<double> gauss(0.0, scale);
  Vector x(dimension(s));
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = gauss(rng);
  return project(s, x);
}

namespace {

// Bound arithmetic for box differences (inf-safe).
double sub_bound(double a, double b) {
  if (a == -kInf || b == kInf) return -kInf;
  if (a == kInf || b == -kInf) return kInf;
  return a - b;
}

SetDescriptor negate_set(const SetDescriptor& s) {
  return std::visit(
      [&s](const auto& d) -> SetDescriptor {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Singleton>)
          return make_singleton(-d.u);
        else if constexpr (std::is_same_v<T, Ball>)
          return make_ball(-d.center, d.radius);
        else if constexpr (std::is_same_v<T, Box>) {
          Vector lo(d.lower.size()), hi(d.upper.size());
          for (Eigen::Index i = 0; i < lo.size(); ++i) {
            lo[i] = -d.upper[i];
            hi[i] = -d.lower[i];
          }
          return make_box(lo, hi);
        } else if constexpr (std::is_same_v<T, Hyperplane>)
          return make_hyperplane(d.normal, -d.offset);
        else if constexpr (std::is_same_v<T, Halfspace>)
          return make_halfspace(-d.normal, d.offset);
        else if constexpr (std::is_same_v<T, Subspace>)
          return make_subspace(d.basis);
        else if constexpr (std::is_same_v<T, Ray>)
          return make_ray(-d.direction);
        else if constexpr (std::is_same_v<T, FinitelyGeneratedCone>) {
          auto gens = d.generators;
          for (auto& g : gens) g = -g;
          return make_generated_cone(std::move(gens));
        } else if constexpr (std::is_same_v<T, PolarCone>)
          return make_polar(negate_set(*d.of));
        else if constexpr (std::is_same_v<T, TruncatedCone>)
          return make_truncated_cone(negate_set(*d.cone), d.radius);
        else if constexpr (std::is_same_v<T, Translate>)
          return make_translate(negate_set(*d.base), -d.shift);
        else if constexpr (std::is_same_v<T, MinkowskiSum>) {
          std::vector<SetDescriptor> parts;
          for (const auto& p : d.parts) parts.push_back(negate_set(*p));
          return make_minkowski_sum(std::move(parts));
        } else if constexpr (std::is_same_v<T, Polytope>) {
          auto vs = d.vertices;
          for (auto& v : vs) v = -v;
          return make_polytope(std::move(vs));
        } else
          return make_cone_intersection(negate_set(*d.k1), negate_set(*d.k2));
      },
      s.v);
}

// Catalog form of cl(D - C) when one is derivable, for the exact witness.
std::optional<SetDescriptor> difference_set(const SetDescriptor& c,
                                            const SetDescriptor& d) {
  if (auto u = singleton_point(c))
    return make_translate(d, -*u);
  if (auto u = singleton_point(d))
    return make_translate(negate_set(c), *u);
  if (const auto* tc = std::get_if<Translate>(&c.v)) {
    auto base = difference_set(*tc->base, d);
    if (!base) return std::nullopt;
    return make_translate(std::move(*base), -tc->shift);
  }
  if (const auto* td = std::get_if<Translate>(&d.v)) {
    auto base = difference_set(c, *td->base);
    if (!base) return std::nullopt;
    return make_translate(std::move(*base), td->shift);
  }
  if (const auto* bc = std::get_if<Box>(&c.v))
    if (const auto* bd = std::get_if<Box>(&d.v)) {
      Vector lo(bc->lower.size()), hi(bc->lower.size());
      for (Eigen::Index i = 0; i < lo.size(); ++i) {
        lo[i] = sub_bound(bd->lower[i], bc->upper[i]);
        hi[i] = sub_bound(bd->upper[i], bc->lower[i]);
      }
      return make_box(lo, hi);
    }
  if (const auto* sc = std::get_if<Subspace>(&c.v))
    if (const auto* sd = std::get_if<Subspace>(&d.v)) {
      Matrix joined(sc->basis.rows(), sc->basis.cols() + sd->basis.cols());
      joined << sc->basis, sd->basis;
      return make_subspace(detail::orth(joined));
    }
  if (const auto* kc = std::get_if<Ball>(&c.v))
    if (const auto* kd = std::get_if<Ball>(&d.v))
      return make_ball(kd->center - kc->center, kc->radius + kd->radius);
  return std::nullopt;
}

}  // namespace

Vector set_difference_witness(const SetDescriptor& c, const SetDescriptor& d,
                              const SampleConfig& cfg) {
  if (dimension(c) != dimension(d))
    throw DimensionMismatch("set difference dimension mismatch");
  const int n = dimension(c);
  // cones both contain 0, hence 0 is in cl(D - C)
  if (is_cone(c) && is_cone(d)) return Vector::Zero(n);
  if (auto diff = difference_set(c, d))
    return project(*diff, Vector::Zero(n));
  // alternating minimization of ||d - c||; the gap vector is the witness
  Vector pc = project(c, Vector::Zero(n));
  Vector pd = project(d, pc);
  Vector gap = pd - pc;
  for (int it = 0; it < 20000; ++it) {
    pc = project(c, pd);
    pd = project(d, pc);
    Vector next = pd - pc;
    double change = (next - gap).norm();
    gap = next;
    if (change <= 1e-12 * (1.0 + gap.norm())) return gap;
  }
  (void)cfg;
  throw NotSupported("set difference witness did not converge");
}

}  // namespace projcert
