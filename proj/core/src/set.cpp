#include "projcert/set.hpp"

#include <cmath>
#include <limits>

#include "projcert/errors.hpp"
#include "projcert/json_util.hpp"
#include "linalg.hpp"

namespace projcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(const Vector& v, const char* what) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i]))
      throw InvalidDescriptor(std::string(what) + " must be finite");
}

using detail::columns;
using detail::complement;
using detail::orth;

enum class AxisKind { Zero, NonNeg, NonPos, Free, Other };

AxisKind axis_kind(double lo, double hi) {
  if (lo == 0 && hi == 0) return AxisKind::Zero;
  if (lo == 0 && hi == kInf) return AxisKind::NonNeg;
  if (lo == -kInf && hi == 0) return AxisKind::NonPos;
  if (lo == -kInf && hi == kInf) return AxisKind::Free;
  return AxisKind::Other;
}

}  // namespace

SetDescriptor make_singleton(Vector u) {
  require_finite(u, "singleton point");
  return {Singleton{std::move(u)}};
}

SetDescriptor make_ball(Vector center, double radius) {
  require_finite(center, "ball center");
  if (!(radius >= 0)) throw InvalidDescriptor("ball radius must be >= 0");
  if (radius == 0) return make_singleton(std::move(center));
  return {Ball{std::move(center), radius}};
}

SetDescriptor make_box(Vector lower, Vector upper) {
  if (lower.size() != upper.size())
    throw InvalidDescriptor("box bounds must have equal length");
  bool all_equal = true;
  for (Eigen::Index i = 0; i < lower.size(); ++i) {
    if (std::isnan(lower[i]) || std::isnan(upper[i]))
      throw InvalidDescriptor("box bounds must not be NaN");
    if (lower[i] > upper[i])
      throw InvalidDescriptor("box lower bound exceeds upper bound");
    if (!(lower[i] == upper[i] && std::isfinite(lower[i]))) all_equal = false;
  }
  if (all_equal && lower.size() > 0) return make_singleton(std::move(lower));
  return {Box{std::move(lower), std::move(upper)}};
}

SetDescriptor make_hyperplane(Vector normal, double offset) {
  require_finite(normal, "hyperplane normal");
  if (normal.norm() == 0) throw ZeroVector("hyperplane normal is zero");
  if (!std::isfinite(offset))
    throw InvalidDescriptor("hyperplane offset must be finite");
  return {Hyperplane{std::move(normal), offset}};
}

SetDescriptor make_halfspace(Vector normal, double offset) {
  require_finite(normal, "halfspace normal");
  if (normal.norm() == 0) throw ZeroVector("halfspace normal is zero");
  if (!std::isfinite(offset))
    throw InvalidDescriptor("halfspace offset must be finite");
  return {Halfspace{std::move(normal), offset}};
}

SetDescriptor make_subspace(Matrix basis) {
  if (basis.cols() > 0) {
    Matrix g = basis.transpose() * basis;
    double dev = (g - Matrix::Identity(basis.cols(), basis.cols()))
                     .cwiseAbs()
                     .maxCoeff();
    if (dev > 1e-12)
      throw InvalidDescriptor("subspace basis is not orthonormal");
  }
  return {Subspace{std::move(basis)}};
}

SetDescriptor make_ray(Vector direction) {
  require_finite(direction, "ray direction");
  double n = direction.norm();
  if (n == 0) throw ZeroVector("ray direction is zero");
  // keep already-unit directions bit-stable so parsing is idempotent
  if (std::abs(n - 1.0) > 1e-12) direction /= n;
  return {Ray{std::move(direction)}};
}

SetDescriptor make_generated_cone(std::vector<Vector> generators) {
  if (generators.empty())
    throw InvalidDescriptor("generated cone needs at least one generator");
  for (auto& g : generators) {
    require_finite(g, "cone generator");
    double n = g.norm();
    if (n == 0) throw ZeroVector("cone generator is zero");
    if (std::abs(n - 1.0) > 1e-12) g /= n;
  }
  return {FinitelyGeneratedCone{std::move(generators)}};
}

SetDescriptor make_polar(SetDescriptor of) {
  if (!is_cone(of)) throw NotACone("polar cone requires a cone variant");
  return {PolarCone{ptr(std::move(of))}};
}

SetDescriptor make_truncated_cone(SetDescriptor cone, double radius) {
  if (!is_cone(cone)) throw NotACone("truncated cone requires a cone variant");
  if (!(radius > 0))
    throw InvalidDescriptor("truncated cone radius must be positive");
  return {TruncatedCone{ptr(std::move(cone)), radius}};
}

SetDescriptor make_translate(SetDescriptor base, Vector shift) {
  require_finite(shift, "translate shift");
  if (dimension(base) != shift.size())
    throw DimensionMismatch("translate shift dimension mismatch");
  if (auto p = singleton_point(base)) return make_singleton(*p + shift);
  if (const auto* t = std::get_if<Translate>(&base.v))
    return make_translate(*t->base, t->shift + shift);
  if (shift.norm() == 0) return base;
  return {Translate{ptr(std::move(base)), std::move(shift)}};
}

SetDescriptor make_minkowski_sum(std::vector<SetDescriptor> parts) {
  if (parts.empty())
    throw InvalidDescriptor("minkowski sum needs at least one part");
  std::vector<SetPtr> ps;
  ps.reserve(parts.size());
  int n = dimension(parts.front());
  for (auto& p : parts) {
    if (dimension(p) != n)
      throw DimensionMismatch("minkowski sum parts disagree on dimension");
    ps.push_back(ptr(std::move(p)));
  }
  return {MinkowskiSum{std::move(ps)}};
}

SetDescriptor make_polytope(std::vector<Vector> vertices) {
  if (vertices.empty())
    throw InvalidDescriptor("polytope needs at least one vertex");
  for (const auto& v : vertices) require_finite(v, "polytope vertex");
  if (vertices.size() == 1) return make_singleton(vertices.front());
  return {Polytope{std::move(vertices)}};
}

SetDescriptor make_cone_intersection(SetDescriptor k1, SetDescriptor k2) {
  if (!is_cone(k1) || !is_cone(k2))
    throw NotACone("cone intersection requires cone variants");
  if (dimension(k1) != dimension(k2))
    throw DimensionMismatch("cone intersection dimension mismatch");
  return {ConeIntersection{ptr(std::move(k1)), ptr(std::move(k2))}};
}

SetDescriptor make_interval(double lo, double hi) {
  Vector l(1), u(1);
  l[0] = lo;
  u[0] = hi;
  return make_box(l, u);
}

SetDescriptor make_whole_space(int n) {
  return make_box(Vector::Constant(n, -kInf), Vector::Constant(n, kInf));
}

int dimension(const SetDescriptor& s) {
  return std::visit(
      [](const auto& d) -> int {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Singleton>)
          return static_cast<int>(d.u.size());
        else if constexpr (std::is_same_v<T, Ball>)
          return static_cast<int>(d.center.size());
        else if constexpr (std::is_same_v<T, Box>)
          return static_cast<int>(d.lower.size());
        else if constexpr (std::is_same_v<T, Hyperplane> ||
                           std::is_same_v<T, Halfspace>)
          return static_cast<int>(d.normal.size());
        else if constexpr (std::is_same_v<T, Subspace>)
          return static_cast<int>(d.basis.rows());
        else if constexpr (std::is_same_v<T, Ray>)
          return static_cast<int>(d.direction.size());
        else if constexpr (std::is_same_v<T, FinitelyGeneratedCone>)
          return static_cast<int>(d.generators.front().size());
        else if constexpr (std::is_same_v<T, PolarCone>)
          return dimension(*d.of);
        else if constexpr (std::is_same_v<T, TruncatedCone>)
          return dimension(*d.cone);
        else if constexpr (std::is_same_v<T, Translate>)
          return static_cast<int>(d.shift.size());
        else if constexpr (std::is_same_v<T, MinkowskiSum>)
          return dimension(*d.parts.front());
        else if constexpr (std::is_same_v<T, Polytope>)
          return static_cast<int>(d.vertices.front().size());
        else
          return dimension(*d.k1);
      },
      s.v);
}

bool is_cone(const SetDescriptor& s) {
  return std::visit(
      [](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Singleton>)
          return d.u.norm() == 0;
        else if constexpr (std::is_same_v<T, Box>) {
          for (Eigen::Index i = 0; i < d.lower.size(); ++i)
            if (axis_kind(d.lower[i], d.upper[i]) == AxisKind::Other)
              return false;
          return true;
        } else if constexpr (std::is_same_v<T, Hyperplane> ||
                             std::is_same_v<T, Halfspace>)
          return d.offset == 0;
        else if constexpr (std::is_same_v<T, Subspace> ||
                           std::is_same_v<T, Ray> ||
                           std::is_same_v<T, FinitelyGeneratedCone> ||
                           std::is_same_v<T, PolarCone> ||
                           std::is_same_v<T, ConeIntersection>)
          return true;
        else if constexpr (std::is_same_v<T, Translate>)
          return false;  // nonzero shift by construction
        else if constexpr (std::is_same_v<T, MinkowskiSum>) {
          for (const auto& p : d.parts)
            if (!is_cone(*p)) return false;
          return true;
        } else
          return false;  // Ball (r > 0), TruncatedCone, Polytope
      },
      s.v);
}

bool is_singleton(const SetDescriptor& s) {
  return singleton_point(s).has_value();
}

std::optional<Vector> singleton_point(const SetDescriptor& s) {
  if (const auto* p = std::get_if<Singleton>(&s.v)) return p->u;
  if (const auto* sub = std::get_if<Subspace>(&s.v))
    if (sub->basis.cols() == 0) return Vector::Zero(sub->basis.rows());
  if (const auto* b = std::get_if<Box>(&s.v)) {
    // lower == upper normalizes away in make_box; kept for robustness
    if (b->lower == b->upper && b->lower.allFinite()) return b->lower;
  }
  if (const auto* m = std::get_if<MinkowskiSum>(&s.v)) {
    Vector acc;
    for (const auto& p : m->parts) {
      auto pt = singleton_point(*p);
      if (!pt) return std::nullopt;
      acc = acc.size() ? Vector(acc + *pt) : *pt;
    }
    return acc;
  }
  return std::nullopt;
}

bool is_whole_space(const SetDescriptor& s) {
  if (const auto* b = std::get_if<Box>(&s.v)) {
    for (Eigen::Index i = 0; i < b->lower.size(); ++i)
      if (b->lower[i] != -kInf || b->upper[i] != kInf) return false;
    return true;
  }
  if (const auto* sub = std::get_if<Subspace>(&s.v))
    return sub->basis.cols() == sub->basis.rows();
  return false;
}

bool structurally_equal(const SetDescriptor& a, const SetDescriptor& b) {
  return to_json(a) == to_json(b);
}

std::optional<Matrix> span_of_differences(const SetDescriptor& s) {
  int n = dimension(s);
  return std::visit(
      [n](const auto& d) -> std::optional<Matrix> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Singleton>)
          return Matrix(n, 0);
        else if constexpr (std::is_same_v<T, Ball> ||
                           std::is_same_v<T, Halfspace>)
          return Matrix::Identity(n, n);
        else if constexpr (std::is_same_v<T, Box>) {
          std::vector<Vector> axes;
          for (Eigen::Index i = 0; i < d.lower.size(); ++i)
            if (d.lower[i] < d.upper[i]) axes.push_back(Vector::Unit(n, i));
          return columns(axes, n);
        } else if constexpr (std::is_same_v<T, Hyperplane>)
          return complement(orth(d.normal / d.normal.norm()));
        else if constexpr (std::is_same_v<T, Subspace>)
          return d.basis;
        else if constexpr (std::is_same_v<T, Ray>)
          return orth(d.direction);
        else if constexpr (std::is_same_v<T, FinitelyGeneratedCone>)
          return orth(columns(d.generators, n));
        else if constexpr (std::is_same_v<T, PolarCone>) {
          // span(K^-) is derivable only for a few inner shapes
          if (std::holds_alternative<Subspace>(d.of->v))
            return complement(std::get<Subspace>(d.of->v).basis);
          if (const auto* h = std::get_if<Halfspace>(&d.of->v))
            return orth(h->normal / h->normal.norm());
          if (std::holds_alternative<Ray>(d.of->v))
            return Matrix::Identity(n, n);  // polar of a ray is a halfspace
          if (auto p = singleton_point(*d.of))
            if (p->norm() == 0) return Matrix::Identity(n, n);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, TruncatedCone>)
          return span_of_differences(*d.cone);
        else if constexpr (std::is_same_v<T, Translate>)
          return span_of_differences(*d.base);
        else if constexpr (std::is_same_v<T, MinkowskiSum>) {
          Matrix acc(n, 0);
          for (const auto& p : d.parts) {
            auto sp = span_of_differences(*p);
            if (!sp) return std::nullopt;
            Matrix joined(n, acc.cols() + sp->cols());
            joined << acc, *sp;
            acc = orth(joined);
          }
          return acc;
        } else if constexpr (std::is_same_v<T, Polytope>) {
          std::vector<Vector> diffs;
          for (std::size_t i = 1; i < d.vertices.size(); ++i)
            diffs.push_back(d.vertices[i] - d.vertices.front());
          return orth(columns(diffs, n));
        } else
          return std::nullopt;  // ConeIntersection: span unknown in general
      },
      s.v);
}

SetDescriptor polar_of(const SetDescriptor& s) {
  if (!is_cone(s)) throw NotACone("polar is defined for cone variants");
  int n = dimension(s);
  if (auto p = singleton_point(s); p && p->norm() == 0)
    return make_whole_space(n);
  return std::visit(
      [n, &s](const auto& d) -> SetDescriptor {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Ray>)
          return make_halfspace(d.direction, 0.0);
        else if constexpr (std::is_same_v<T, Halfspace>)
          return make_ray(d.normal);
        else if constexpr (std::is_same_v<T, Hyperplane>)
          return make_subspace(orth(d.normal / d.normal.norm()));
        else if constexpr (std::is_same_v<T, Subspace>)
          return make_subspace(complement(d.basis));
        else if constexpr (std::is_same_v<T, Box>) {
          Vector lo(n), hi(n);
          for (int i = 0; i < n; ++i) {
            switch (axis_kind(d.lower[i], d.upper[i])) {
              case AxisKind::Zero: lo[i] = -kInf; hi[i] = kInf; break;
              case AxisKind::NonNeg: lo[i] = -kInf; hi[i] = 0; break;
              case AxisKind::NonPos: lo[i] = 0; hi[i] = kInf; break;
              default: lo[i] = 0; hi[i] = 0; break;  // Free
            }
          }
          return make_box(lo, hi);
        } else if constexpr (std::is_same_v<T, PolarCone>)
          return *d.of;  // bipolar: closed convex cones satisfy K^-- = K
        else
          return make_polar(s);
      },
      s.v);
}

std::pair<double, double> interval_of(const SetDescriptor& s) {
  if (dimension(s) != 1)
    throw WrongDimension("interval form requires dimension 1");
  return std::visit(
      [&](const auto& d) -> std::pair<double, double> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Singleton>)
          return {d.u[0], d.u[0]};
        else if constexpr (std::is_same_v<T, Ball>)
          return {d.center[0] - d.radius, d.center[0] + d.radius};
        else if constexpr (std::is_same_v<T, Box>)
          return {d.lower[0], d.upper[0]};
        else if constexpr (std::is_same_v<T, Hyperplane>)
          return {d.offset / d.normal[0], d.offset / d.normal[0]};
        else if constexpr (std::is_same_v<T, Halfspace>) {
          double b = d.offset / d.normal[0];
          return d.normal[0] > 0 ? std::make_pair(-kInf, b)
                                 : std::make_pair(b, kInf);
        } else if constexpr (std::is_same_v<T, Subspace>)
          return d.basis.cols() == 0 ? std::make_pair(0.0, 0.0)
                                     : std::make_pair(-kInf, kInf);
        else if constexpr (std::is_same_v<T, Ray>)
          return d.direction[0] > 0 ? std::make_pair(0.0, kInf)
                                    : std::make_pair(-kInf, 0.0);
        else if constexpr (std::is_same_v<T, FinitelyGeneratedCone>) {
          bool pos = false, neg = false;
          for (const auto& g : d.generators) (g[0] > 0 ? pos : neg) = true;
          return {neg ? -kInf : 0.0, pos ? kInf : 0.0};
        } else if constexpr (std::is_same_v<T, PolarCone>) {
          auto [lo, hi] = interval_of(*d.of);
          // polar of an interval cone in R^1
          if (lo == 0 && hi == 0) return {-kInf, kInf};
          if (lo < 0 && hi > 0) return {0.0, 0.0};
          return lo < 0 ? std::make_pair(0.0, kInf)
                        : std::make_pair(-kInf, 0.0);
        } else if constexpr (std::is_same_v<T, TruncatedCone>) {
          auto [lo, hi] = interval_of(*d.cone);
          return {std::max(lo, -d.radius), std::min(hi, d.radius)};
        } else if constexpr (std::is_same_v<T, Translate>) {
          auto [lo, hi] = interval_of(*d.base);
          return {lo + d.shift[0], hi + d.shift[0]};
        } else if constexpr (std::is_same_v<T, MinkowskiSum>) {
          double lo = 0, hi = 0;
          for (const auto& p : d.parts) {
            auto [l, h] = interval_of(*p);
            lo += l;
            hi += h;
          }
          return {lo, hi};
        } else if constexpr (std::is_same_v<T, Polytope>) {
          double lo = kInf, hi = -kInf;
          for (const auto& v : d.vertices) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
          }
          return {lo, hi};
        } else {
          auto [l1, h1] = interval_of(*d.k1);
          auto [l2, h2] = interval_of(*d.k2);
          return {std::max(l1, l2), std::min(h1, h2)};
        }
      },
      s.v);
}

// --- JSON ---

namespace {

nlohmann::json bound_to_json(double b) {
  if (b == kInf) return "inf";
  if (b == -kInf) return "-inf";
  return b;
}

double bound_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j == "inf") return kInf;
    if (j == "-inf") return -kInf;
    throw ParseError("bad box bound string");
  }
  if (!j.is_number()) throw ParseError("box bound must be number or inf");
  return j.get<double>();
}

nlohmann::json vecs_to_json(const std::vector<Vector>& vs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : vs) a.push_back(vec_to_json(v));
  return a;
}

std::vector<Vector> vecs_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected array of vectors");
  std::vector<Vector> vs;
  for (const auto& e : j) vs.push_back(vec_from_json(e));
  return vs;
}

}  // namespace

nlohmann::json to_json(const SetDescriptor& s) {
  using nlohmann::json;
  return std::visit(
      [](const auto& d) -> json {
        using T = std::decay_t<decltype(d)>;
        json j;
        if constexpr (std::is_same_v<T, Singleton>) {
          j["variant"] = "singleton";
          j["point"] = vec_to_json(d.u);
        } else if constexpr (std::is_same_v<T, Ball>) {
          j["variant"] = "ball";
          j["center"] = vec_to_json(d.center);
          j["radius"] = d.radius;
        } else if constexpr (std::is_same_v<T, Box>) {
          j["variant"] = "box";
          json lo = json::array(), hi = json::array();
          for (Eigen::Index i = 0; i < d.lower.size(); ++i) {
            lo.push_back(bound_to_json(d.lower[i]));
            hi.push_back(bound_to_json(d.upper[i]));
          }
          j["lower"] = lo;
          j["upper"] = hi;
        } else if constexpr (std::is_same_v<T, Hyperplane>) {
          j["variant"] = "hyperplane";
          j["normal"] = vec_to_json(d.normal);
          j["offset"] = d.offset;
        } else if constexpr (std::is_same_v<T, Halfspace>) {
          j["variant"] = "halfspace";
          j["normal"] = vec_to_json(d.normal);
          j["offset"] = d.offset;
        } else if constexpr (std::is_same_v<T, Subspace>) {
          j["variant"] = "subspace";
          j["dimension"] = d.basis.rows();
          json b = json::array();
          for (Eigen::Index c = 0; c < d.basis.cols(); ++c)
            b.push_back(vec_to_json(d.basis.col(c)));
          j["basis"] = b;
        } else if constexpr (std::is_same_v<T, Ray>) {
          j["variant"] = "ray";
          j["direction"] = vec_to_json(d.direction);
        } else if constexpr (std::is_same_v<T, FinitelyGeneratedCone>) {
          j["variant"] = "finitely_generated_cone";
          j["generators"] = vecs_to_json(d.generators);
        } else if constexpr (std::is_same_v<T, PolarCone>) {
          j["variant"] = "polar_cone";
          j["of"] = to_json(*d.of);
        } else if constexpr (std::is_same_v<T, TruncatedCone>) {
          j["variant"] = "truncated_cone";
          j["cone"] = to_json(*d.cone);
          j["radius"] = d.radius;
        } else if constexpr (std::is_same_v<T, Translate>) {
          j["variant"] = "translate";
          j["base"] = to_json(*d.base);
          j["shift"] = vec_to_json(d.shift);
        } else if constexpr (std::is_same_v<T, MinkowskiSum>) {
          j["variant"] = "minkowski_sum";
          json ps = json::array();
          for (const auto& p : d.parts) ps.push_back(to_json(*p));
          j["parts"] = ps;
        } else if constexpr (std::is_same_v<T, Polytope>) {
          j["variant"] = "polytope";
          j["vertices"] = vecs_to_json(d.vertices);
        } else {
          j["variant"] = "cone_intersection";
          j["k1"] = to_json(*d.k1);
          j["k2"] = to_json(*d.k2);
        }
        return j;
      },
      s.v);
}

SetDescriptor set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("variant"))
    throw ParseError("set descriptor needs a variant tag");
  const std::string tag = j["variant"].get<std::string>();
  if (tag == "singleton") {
    require_keys(j, {"variant", "point"});
    return make_singleton(vec_from_json(require_field(j, "point")));
  }
  if (tag == "ball") {
    require_keys(j, {"variant", "center", "radius"});
    return make_ball(vec_from_json(require_field(j, "center")),
                     require_field(j, "radius").get<double>());
  }
  if (tag == "box") {
    require_keys(j, {"variant", "lower", "upper"});
    const auto& lo = require_field(j, "lower");
    const auto& hi = require_field(j, "upper");
    if (!lo.is_array() || !hi.is_array() || lo.size() != hi.size())
      throw ParseError("box bounds must be arrays of equal length");
    Vector l(static_cast<Eigen::Index>(lo.size()));
    Vector u(static_cast<Eigen::Index>(hi.size()));
    for (std::size_t i = 0; i < lo.size(); ++i) {
      l[static_cast<Eigen::Index>(i)] = bound_from_json(lo[i]);
      u[static_cast<Eigen::Index>(i)] = bound_from_json(hi[i]);
    }
    return make_box(std::move(l), std::move(u));
  }
  if (tag == "hyperplane") {
    require_keys(j, {"variant", "normal", "offset"});
    return make_hyperplane(vec_from_json(require_field(j, "normal")),
                           require_field(j, "offset").get<double>());
  }
  if (tag == "halfspace") {
    require_keys(j, {"variant", "normal", "offset"});
    return make_halfspace(vec_from_json(require_field(j, "normal")),
                          require_field(j, "offset").get<double>());
  }
  if (tag == "subspace") {
    require_keys(j, {"variant", "dimension", "basis"});
    int n = require_field(j, "dimension").get<int>();
    auto cols = vecs_from_json(require_field(j, "basis"));
    Matrix b(n, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != n) throw ParseError("basis vector length mismatch");
      b.col(static_cast<Eigen::Index>(c)) = cols[c];
    }
    return make_subspace(std::move(b));
  }
  if (tag == "ray") {
    require_keys(j, {"variant", "direction"});
    return make_ray(vec_from_json(require_field(j, "direction")));
  }
  if (tag == "finitely_generated_cone") {
    require_keys(j, {"variant", "generators"});
    return make_generated_cone(vecs_from_json(require_field(j, "generators")));
  }
  if (tag == "polar_cone") {
    require_keys(j, {"variant", "of"});
    return make_polar(set_from_json(require_field(j, "of")));
  }
  if (tag == "truncated_cone") {
    require_keys(j, {"variant", "cone", "radius"});
    return make_truncated_cone(set_from_json(require_field(j, "cone")),
                               require_field(j, "radius").get<double>());
  }
  if (tag == "translate") {
    require_keys(j, {"variant", "base", "shift"});
    return make_translate(set_from_json(require_field(j, "base")),
                          vec_from_json(require_field(j, "shift")));
  }
  if (tag == "minkowski_sum") {
    require_keys(j, {"variant", "parts"});
    const auto& ps = require_field(j, "parts");
    if (!ps.is_array()) throw ParseError("parts must be an array");
    std::vector<SetDescriptor> parts;
    for (const auto& p : ps) parts.push_back(set_from_json(p));
    return make_minkowski_sum(std::move(parts));
  }
  if (tag == "polytope") {
    require_keys(j, {"variant", "vertices"});
    return make_polytope(vecs_from_json(require_field(j, "vertices")));
  }
  if (tag == "cone_intersection") {
    require_keys(j, {"variant", "k1", "k2"});
    return make_cone_intersection(set_from_json(require_field(j, "k1")),
                                  set_from_json(require_field(j, "k2")));
  }
  throw ParseError("unknown set variant: " + tag);
}

}  // namespace projcert
