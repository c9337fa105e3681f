#include "zigzag/geometry2d.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "exact.hpp"
#include "geometry_internal.hpp"

namespace zigzag {

namespace {

template <class F>
auto decide(F&& fn) {
  return detail::filtered(std::forward<F>(fn));
}

}  // namespace

std::string to_string(const Point2& p) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << p.x() << ", " << p.y() << ')';
  return os.str();
}

Segment2::Segment2(Point2 a, Point2 b) : a_(a), b_(b) {
  if (a_ == b_) throw Error(Errc::DegenerateSegment, "segment endpoints coincide at " + to_string(a_));
}

const char* to_string(ClosestPointClass c) noexcept {
  switch (c) {
    case ClosestPointClass::AtStart: return "AtStart";
    case ClosestPointClass::Interior: return "Interior";
    case ClosestPointClass::AtEnd: return "AtEnd";
  }
  return "?";
}

const char* to_string(Ordering3 o) noexcept {
  switch (o) {
    case Ordering3::Less: return "Less";
    case Ordering3::Equal: return "Equal";
    case Ordering3::Greater: return "Greater";
  }
  return "?";
}

const char* to_string(RegionClass r) noexcept {
  switch (r) {
    case RegionClass::Il: return "Il";
    case RegionClass::IIl: return "IIl";
    case RegionClass::IIIl: return "IIIl";
    case RegionClass::IV: return "IV";
    case RegionClass::IIIr: return "IIIr";
    case RegionClass::IIr: return "IIr";
    case RegionClass::Ir: return "Ir";
    case RegionClass::OnFace: return "OnFace";
    case RegionClass::RightOfSupportLine: return "RightOfSupportLine";
  }
  return "?";
}

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  return decide([&](auto tag) { return detail::orient_sign<decltype(tag)>(a, b, c); });
}

int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  return decide([&](auto tag) { return detail::incircle_sign<decltype(tag)>(a, b, c, d); });
}

bool on_segment(const Segment2& s, const Point2& p) {
  return decide([&](auto tag) { return detail::on_segment<decltype(tag)>(s.a(), s.b(), p); });
}

ClosestPoint closest_point_on_segment(const Segment2& s, const Point2& p) {
  const auto kind = decide(
      [&](auto tag) { return detail::closest_class<decltype(tag)>(s.a(), s.b(), p); });
  switch (kind) {
    case ClosestPointClass::AtStart: return {s.a(), kind};
    case ClosestPointClass::AtEnd: return {s.b(), kind};
    case ClosestPointClass::Interior: break;
  }
  const Vec2 ab = s.b() - s.a();
  const double t = std::clamp(dot(p - s.a(), ab) / norm2(ab), 0.0, 1.0);
  return {Point2(s.a().x() + t * ab.x, s.a().y() + t * ab.y), kind};
}

OrientedDistance oriented_distance(const Segment2& s, const Point2& p) {
  if (on_segment(s, p)) {
    throw Error(Errc::PointOnEdge, "target " + to_string(p) + " lies on the segment");
  }
  const ClosestPoint cp = closest_point_on_segment(s, p);
  Vec2 w;
  Vec2 u;
  double d2 = 0.0;
  double alpha = std::numbers::pi / 2;
  switch (cp.kind) {
    case ClosestPointClass::AtStart:
      w = p - s.a();
      u = s.b() - s.a();
      break;
    case ClosestPointClass::AtEnd:
      w = p - s.b();
      u = s.a() - s.b();
      break;
    case ClosestPointClass::Interior: {
      u = s.b() - s.a();
      const double c = cross(u, p - s.a());
      d2 = c * c / norm2(u);
      w = p - cp.point;
      break;
    }
  }
  if (cp.kind != ClosestPointClass::Interior) {
    d2 = norm2(w);
    const double c = dot(w, u) / (std::sqrt(norm2(w)) * std::sqrt(norm2(u)));
    alpha = std::acos(std::clamp(c, -1.0, 1.0));
    // Rounding may nudge a right angle just below pi/2.
    alpha = std::max(alpha, std::numbers::pi / 2);
  }
  return OrientedDistance{s, p, d2, cp.kind, w, u, alpha};
}

Ordering3 od_compare(const Segment2& sA, const Segment2& sB, const Point2& p) {
  if (on_segment(sA, p) || on_segment(sB, p)) {
    throw Error(Errc::PointOnEdge, "target " + to_string(p) + " lies on a compared segment");
  }
  return decide([&](auto tag) { return detail::od_compare<decltype(tag)>(sA, sB, p); });
}

Ordering3 od_compare(const OrientedDistance& a, const OrientedDistance& b) {
  if (!(a.target == b.target)) {
    throw Error(Errc::InvariantViolation, "oriented distances refer to different targets");
  }
  return decide(
      [&](auto tag) { return detail::od_compare<decltype(tag)>(a.segment, b.segment, a.target); });
}

bool point_in_triangle(const Point2& a, const Point2& b, const Point2& c, const Point2& p) {
  if (orientation(a, b, c) <= 0) {
    throw Error(Errc::DegenerateTriangle, "triangle is not strictly counter-clockwise");
  }
  return orientation(a, b, p) >= 0 && orientation(b, c, p) >= 0 && orientation(c, a, p) >= 0;
}

RegionClass classify_region(const Point2& e1, const Point2& e2, const Point2& tip,
                            const Point2& p) {
  if (point_in_triangle(e1, e2, tip, p)) return RegionClass::OnFace;
  if (orientation(e1, e2, p) < 0) return RegionClass::RightOfSupportLine;

  // p is outside the closed face, so it is on neither l nor r.
  const Segment2 l(e1, tip);
  const Segment2 r(tip, e2);
  const auto cmp = decide([&](auto tag) {
    using T = decltype(tag);
    std::optional<std::pair<int, int>> out;
    const auto kl = detail::od_key<T>(l.a(), l.b(), p);
    const auto kr = detail::od_key<T>(r.a(), r.b(), p);
    if (!kl || !kr) return out;
    const auto ds = detail::distance_sign(*kl, *kr);
    const auto as = detail::sign_of(T(T(kl->angle_num * kr->angle_den) - T(kr->angle_num * kl->angle_den)));
    if (!ds || !as) return out;
    out = std::pair{*ds, *as};
    return out;
  });
  const auto [dist_sign, angle_sign] = cmp;

  if (dist_sign < 0) {
    return closest_point_on_segment(l, p).kind == ClosestPointClass::Interior ? RegionClass::IIl
                                                                             : RegionClass::Il;
  }
  if (dist_sign > 0) {
    return closest_point_on_segment(r, p).kind == ClosestPointClass::Interior ? RegionClass::IIr
                                                                             : RegionClass::Ir;
  }
  if (angle_sign < 0) return RegionClass::IIIl;
  if (angle_sign > 0) return RegionClass::IIIr;
  return RegionClass::IV;
}

}  // namespace zigzag

namespace zigzag::detail {

Ordering3 od_compare_unchecked(const Segment2& sA, const Segment2& sB, const Point2& p) {
  return filtered([&](auto tag) { return od_compare<decltype(tag)>(sA, sB, p); });
}

}  // namespace zigzag::detail
