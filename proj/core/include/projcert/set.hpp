#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "projcert/types.hpp"

namespace projcert {

struct SetDescriptor;
using SetPtr = std::shared_ptr<const SetDescriptor>;

struct Singleton {
  Vector u;
};

struct Ball {
  Vector center;
  double radius;  // > 0 (radius 0 normalizes to Singleton)
};

// Entries of lower/upper may be -inf/+inf.
struct Box {
  Vector lower;
  Vector upper;
};

struct Hyperplane {
  Vector normal;  // nonzero
  double offset;
};

// { x : <normal, x> <= offset }
struct Halfspace {
  Vector normal;  // nonzero
  double offset;
};

// Columns form an orthonormal basis; zero columns encode {0}.
struct Subspace {
  Matrix basis;
};

// R+ * direction, direction stored unit-length.
struct Ray {
  Vector direction;
};

// Sum of rays R+ u_i; exact projection only when generators are
// pairwise orthogonal or antipodal.
struct FinitelyGeneratedCone {
  std::vector<Vector> generators;
};

struct PolarCone {
  SetPtr of;  // cone variant
};

// K intersected with ball(0, radius).
struct TruncatedCone {
  SetPtr cone;  // cone variant
  double radius;
};

struct Translate {
  SetPtr base;
  Vector shift;
};

// Constructible via a certifying operation (projector = sum of parts').
struct MinkowskiSum {
  std::vector<SetPtr> parts;
};

struct Polytope {
  std::vector<Vector> vertices;
};

// Constructible via a certifying operation (projector = P1 + P2 - Id).
struct ConeIntersection {
  SetPtr k1;
  SetPtr k2;
};

using SetVariant =
    std::variant<Singleton, Ball, Box, Hyperplane, Halfspace, Subspace, Ray,
                 FinitelyGeneratedCone, PolarCone, TruncatedCone, Translate,
                 MinkowskiSum, Polytope, ConeIntersection>;

struct SetDescriptor {
  SetVariant v;
};

// --- constructors (validate + normalize degenerate inputs) ---
SetDescriptor make_singleton(Vector u);
SetDescriptor make_ball(Vector center, double radius);
SetDescriptor make_box(Vector lower, Vector upper);
SetDescriptor make_hyperplane(Vector normal, double offset);
SetDescriptor make_halfspace(Vector normal, double offset);
SetDescriptor make_subspace(Matrix basis);
SetDescriptor make_ray(Vector direction);
SetDescriptor make_generated_cone(std::vector<Vector> generators);
SetDescriptor make_polar(SetDescriptor of);
SetDescriptor make_truncated_cone(SetDescriptor cone, double radius);
SetDescriptor make_translate(SetDescriptor base, Vector shift);
SetDescriptor make_minkowski_sum(std::vector<SetDescriptor> parts);
SetDescriptor make_polytope(std::vector<Vector> vertices);
SetDescriptor make_cone_intersection(SetDescriptor k1, SetDescriptor k2);
SetDescriptor make_interval(double lo, double hi);  // 1-D box/singleton
SetDescriptor make_whole_space(int n);              // box with infinite bounds

inline SetPtr ptr(SetDescriptor s) {
  return std::make_shared<const SetDescriptor>(std::move(s));
}

// --- queries ---
int dimension(const SetDescriptor& s);
bool is_cone(const SetDescriptor& s);
bool is_singleton(const SetDescriptor& s);
bool is_whole_space(const SetDescriptor& s);
bool structurally_equal(const SetDescriptor& a, const SetDescriptor& b);

// Orthonormal basis of span(C - C) when derivable from the descriptor
// alone; nullopt when unknown (e.g. general polar cones).
std::optional<Matrix> span_of_differences(const SetDescriptor& s);

// Polar cone descriptor, reduced to a closed form where one exists.
SetDescriptor polar_of(const SetDescriptor& s);

// 1-D sets as closed intervals [lo, hi] (infinite endpoints allowed).
std::pair<double, double> interval_of(const SetDescriptor& s);

// The single point of a set that is structurally a singleton, if any.
std::optional<Vector> singleton_point(const SetDescriptor& s);

// --- JSON (variant-tagged; box bounds use "inf"/"-inf" strings) ---
nlohmann::json to_json(const SetDescriptor& s);
SetDescriptor set_from_json(const nlohmann::json& j);

}  // namespace projcert
