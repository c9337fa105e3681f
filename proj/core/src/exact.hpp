#pragma once

// Predicates written once over a generic number type and evaluated twice:
// first with Interval (cheap, may return nullopt), then with mpq_class
// (always decides). Every input double is a dyadic rational, so the mpq pass
// is exact.

#include <gmpxx.h>

#include <optional>

#include "interval.hpp"
#include "zigzag/geometry2d.hpp"

namespace zigzag::detail {

inline std::optional<int> sign_of(const mpq_class& v) { return sgn(v); }

template <class T>
struct V2 {
  T x;
  T y;
};

template <class T>
V2<T> sub(const Point2& a, const Point2& b) {
  return {T(a.x()) - T(b.x()), T(a.y()) - T(b.y())};
}

template <class T>
T vdot(const V2<T>& a, const V2<T>& b) {
  return T(a.x * b.x) + T(a.y * b.y);
}

template <class T>
T vcross(const V2<T>& a, const V2<T>& b) {
  return T(a.x * b.y) - T(a.y * b.x);
}

template <class T>
std::optional<int> orient_sign(const Point2& a, const Point2& b, const Point2& c) {
  return sign_of(T(vcross(sub<T>(b, a), sub<T>(c, a))));
}

template <class T>
std::optional<int> incircle_sign(const Point2& a, const Point2& b, const Point2& c,
                                 const Point2& d) {
  const V2<T> ad = sub<T>(a, d);
  const V2<T> bd = sub<T>(b, d);
  const V2<T> cd = sub<T>(c, d);
  const T alift = vdot(ad, ad);
  const T blift = vdot(bd, bd);
  const T clift = vdot(cd, cd);
  const T det = T(alift * vcross(bd, cd)) + T(blift * vcross(cd, ad)) + T(clift * vcross(ad, bd));
  return sign_of(det);
}

/// Closest-point class of p on segment a-b, decided from two dot products.
template <class T>
std::optional<ClosestPointClass> closest_class(const Point2& a, const Point2& b, const Point2& p) {
  const V2<T> ab = sub<T>(b, a);
  const auto start = sign_of(T(vdot(sub<T>(p, a), ab)));
  if (!start) return std::nullopt;
  if (*start <= 0) return ClosestPointClass::AtStart;
  const auto end = sign_of(T(vdot(sub<T>(p, b), ab)));
  if (!end) return std::nullopt;
  if (*end >= 0) return ClosestPointClass::AtEnd;
  return ClosestPointClass::Interior;
}

template <class T>
std::optional<bool> on_segment(const Point2& a, const Point2& b, const Point2& p) {
  const auto o = orient_sign<T>(a, b, p);
  if (!o) return std::nullopt;
  if (*o != 0) return false;
  const V2<T> ab = sub<T>(b, a);
  const auto s0 = sign_of(T(vdot(sub<T>(p, a), ab)));
  const auto s1 = sign_of(T(vdot(sub<T>(p, b), ab)));
  if (!s0 || !s1) return std::nullopt;
  return *s0 >= 0 && *s1 <= 0;
}

/// Oriented distance as exact fractions: d^2 = dist_num / dist_den and the
/// angle key (w.u)^2 / |u|^2 (zero for an interior foot).
template <class T>
struct OdKey {
  T dist_num;
  T dist_den;
  T angle_num;
  T angle_den;
  // Set when the foot is a segment endpoint.
  const Point2* corner = nullptr;
};

template <class T>
std::optional<OdKey<T>> od_key(const Point2& a, const Point2& b, const Point2& p) {
  const auto cls = closest_class<T>(a, b, p);
  if (!cls) return std::nullopt;
  switch (*cls) {
    case ClosestPointClass::AtStart: {
      const V2<T> w = sub<T>(p, a);
      const V2<T> u = sub<T>(b, a);
      const T wu = vdot(w, u);
      return OdKey<T>{vdot(w, w), T(1), T(wu * wu), vdot(u, u), &a};
    }
    case ClosestPointClass::AtEnd: {
      const V2<T> w = sub<T>(p, b);
      const V2<T> u = sub<T>(a, b);
      const T wu = vdot(w, u);
      return OdKey<T>{vdot(w, w), T(1), T(wu * wu), vdot(u, u), &b};
    }
    case ClosestPointClass::Interior: {
      const V2<T> ab = sub<T>(b, a);
      const T c = vcross(ab, sub<T>(p, a));
      return OdKey<T>{T(c * c), vdot(ab, ab), T(0), T(1)};
    }
  }
  return std::nullopt;
}

template <class T>
std::optional<int> distance_sign(const OdKey<T>& ka, const OdKey<T>& kb) {
  // Same foot vertex: the distances are equal, which an interval cannot show.
  if (ka.corner && kb.corner && *ka.corner == *kb.corner) return 0;
  return sign_of(T(T(ka.dist_num * kb.dist_den) - T(kb.dist_num * ka.dist_den)));
}

template <class T>
std::optional<Ordering3> od_compare_keys(const OdKey<T>& ka, const OdKey<T>& kb) {
  const auto ds = distance_sign(ka, kb);
  if (!ds) return std::nullopt;
  if (*ds < 0) return Ordering3::Less;
  if (*ds > 0) return Ordering3::Greater;
  // Equal distance: smaller |cos alpha| means smaller alpha, since both
  // cosines are <= 0.
  const auto as = sign_of(T(T(ka.angle_num * kb.angle_den) - T(kb.angle_num * ka.angle_den)));
  if (!as) return std::nullopt;
  if (*as < 0) return Ordering3::Less;
  if (*as > 0) return Ordering3::Greater;
  return Ordering3::Equal;
}

template <class T>
std::optional<Ordering3> od_compare(const Segment2& sa, const Segment2& sb, const Point2& p) {
  const auto ka = od_key<T>(sa.a(), sa.b(), p);
  if (!ka) return std::nullopt;
  const auto kb = od_key<T>(sb.a(), sb.b(), p);
  if (!kb) return std::nullopt;
  return od_compare_keys(*ka, *kb);
}

/// Runs `fn<Interval>` and, if undecided, `fn<mpq_class>`.
template <class F>
auto filtered(F&& fn) {
  if (auto r = fn(Interval{})) return *r;
  return *fn(mpq_class{});
}

}  // namespace zigzag::detail
