#pragma once

#include <cmath>
#include <string>

#include "zigzag/types.hpp"

namespace zigzag {

/// Free vector in the plane. Unlike Point2 it carries no finiteness check;
/// it only ever holds differences of valid points.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) noexcept { return a.x * b.y - a.y * b.x; }
constexpr double norm2(Vec2 a) noexcept { return dot(a, a); }

/// Point with finite coordinates. All exact predicates operate on the
/// binary64 values stored here, i.e. on dyadic rationals.
class Point2 {
 public:
  constexpr Point2() = default;
  Point2(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw Error(Errc::NonFinite, "point coordinates must be finite");
    }
  }

  constexpr double x() const noexcept { return x_; }
  constexpr double y() const noexcept { return y_; }

  friend constexpr bool operator==(const Point2&, const Point2&) = default;
  friend constexpr Vec2 operator-(const Point2& a, const Point2& b) noexcept {
    return {a.x_ - b.x_, a.y_ - b.y_};
  }

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

std::string to_string(const Point2& p);

/// Closed segment a-b with a != b.
class Segment2 {
 public:
  Segment2(Point2 a, Point2 b);

  const Point2& a() const noexcept { return a_; }
  const Point2& b() const noexcept { return b_; }
  Segment2 reversed() const { return Segment2(b_, a_); }

 private:
  Point2 a_;
  Point2 b_;
};

enum class ClosestPointClass { AtStart, Interior, AtEnd };
enum class Ordering3 { Less, Equal, Greater };

const char* to_string(ClosestPointClass c) noexcept;
const char* to_string(Ordering3 o) noexcept;

/// Ordering3 of the reversed comparison.
constexpr Ordering3 flip(Ordering3 o) noexcept {
  return o == Ordering3::Less ? Ordering3::Greater
                              : (o == Ordering3::Greater ? Ordering3::Less : Ordering3::Equal);
}

struct ClosestPoint {
  Point2 point;
  ClosestPointClass kind;
};

/// Oriented distance [d, alpha] of a segment to a target point.
///
/// `w` runs from the closest point e_p to the target, `u` from e_p into the
/// segment (towards the far endpoint when e_p is an endpoint). alpha is the
/// angle between them and always lies in [pi/2, pi]. The numeric fields are
/// for display; comparisons go back to `segment` and `target` and are exact.
struct OrientedDistance {
  Segment2 segment;
  Point2 target;
  double d2;
  ClosestPointClass closest;
  Vec2 w;
  Vec2 u;
  double alpha_display;

  double distance() const { return std::sqrt(d2); }
};

/// Regions of the half-plane left of edge e1->e2 relative to the triangle
/// (e1, e2, tip). l is the side e1-tip and r the side tip-e2.
enum class RegionClass {
  Il,
  IIl,
  IIIl,
  IV,
  IIIr,
  IIr,
  Ir,
  OnFace,
  RightOfSupportLine,
};

const char* to_string(RegionClass r) noexcept;

/// +1 if c lies strictly left of the directed line a->b, -1 if strictly right,
/// 0 if collinear. Exact.
int orientation(const Point2& a, const Point2& b, const Point2& c);

/// +1 if d lies strictly inside the circle through the CCW triangle (a, b, c),
/// -1 if strictly outside, 0 if cocircular. Exact.
int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// True iff p lies on the closed segment. Exact.
bool on_segment(const Segment2& s, const Point2& p);

ClosestPoint closest_point_on_segment(const Segment2& s, const Point2& p);

/// Throws Errc::PointOnEdge if p lies on the closed segment.
OrientedDistance oriented_distance(const Segment2& s, const Point2& p);

/// Exact lexicographic comparison of od(sA, p) against od(sB, p).
Ordering3 od_compare(const Segment2& sA, const Segment2& sB, const Point2& p);

/// Same as above; both distances must refer to the same target.
Ordering3 od_compare(const OrientedDistance& a, const OrientedDistance& b);

/// Closed-triangle membership. (a, b, c) must be strictly CCW, otherwise
/// Errc::DegenerateTriangle.
bool point_in_triangle(const Point2& a, const Point2& b, const Point2& c, const Point2& p);

/// Region of p with respect to the CCW triangle (e1, e2, tip).
RegionClass classify_region(const Point2& e1, const Point2& e2, const Point2& tip,
                            const Point2& p);

}  // namespace zigzag
