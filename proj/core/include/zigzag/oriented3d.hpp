#pragma once

#include <array>
#include <cmath>

#include "zigzag/geometry2d.hpp"
#include "zigzag/types.hpp"

namespace zigzag {

// Three-dimensional oriented distance [d, alpha, beta] of a triangle to a
// point. Floating point throughout; this is a comparator for exploration,
// not an exact predicate.
//
// Definitions used here. Let q be the closest point of the triangle to p and
// w = p - q. A roll axis is a direction t in the face plane through q that
// keeps the axis inside the triangle near q (the tangent cone at q). The
// pitch angle is angle(w, t); the pitch axis is w x t; the roll angle is the
// angle between the face plane and the plane spanned by t and the pitch
// axis, whose normal is w - (w.t) t. So cos(beta) = |w.n| / |w - (w.t) t|.
//
// Minimizing pitch first: w.t <= 0 on the whole cone because w's in-plane
// part lies in the normal cone at q, and a cosine over an arc that excludes
// its peak is maximal at an arc endpoint. Hence
//   face interior:  every t gives alpha = pi/2 and beta = 0;
//   edge interior:  t = +-edge direction, alpha = pi/2,
//                   beta = acos(|w.n| / |w|);
//   vertex:         t is one of the two incident edge directions; take the
//                   smaller pitch, then the smaller roll.
// If w is parallel to the chosen t the pitch-roll plane is not unique; the
// minimum over that family is beta = 0.

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

/// Finite 3D point; same storage as Vec3.
class Point3 {
 public:
  constexpr Point3() = default;
  Point3(double x, double y, double z);

  constexpr const Vec3& vec() const noexcept { return v_; }
  constexpr double x() const noexcept { return v_.x; }
  constexpr double y() const noexcept { return v_.y; }
  constexpr double z() const noexcept { return v_.z; }

 private:
  Vec3 v_;
};

class Triangle3 {
 public:
  /// Throws Errc::DegenerateTriangle for (nearly) collinear vertices.
  Triangle3(Point3 a, Point3 b, Point3 c);

  const Point3& vertex(int i) const { return v_[static_cast<std::size_t>(i)]; }
  /// Unit normal, right-handed with respect to the vertex order.
  Vec3 normal() const;

 private:
  std::array<Point3, 3> v_;
};

enum class TriangleFeature { Face, Edge, Vertex };

/// Edge i runs from vertex i to vertex (i + 1) % 3.
struct ClosestFeature {
  TriangleFeature kind;
  int index;  // unused for Face
};

struct ClosestPoint3 {
  Vec3 point;
  ClosestFeature feature;
};

struct OrientedDistance3 {
  double d2;
  double alpha;
  double beta;
  ClosestFeature feature;
  /// The foot lies on an edge or vertex, so admissible roll axes are
  /// restricted to the tangent cone there.
  bool foot_on_boundary = false;
};

/// Throws Errc::PointOnFace if p lies on the closed triangle (relative
/// tolerance 1e-12).
ClosestPoint3 closest_point_on_triangle(const Triangle3& t, const Point3& p);

OrientedDistance3 oriented_distance3(const Triangle3& t, const Point3& p);

inline constexpr double kOd3Tolerance = 1e-12;

/// Lexicographic on (d2, alpha, beta); components within kOd3Tolerance
/// (absolute) count as equal.
Ordering3 od3_compare(const OrientedDistance3& a, const OrientedDistance3& b);

}  // namespace zigzag
