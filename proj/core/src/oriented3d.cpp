#include "zigzag/oriented3d.hpp"

#include <algorithm>
#include <numbers>
#include <optional>

namespace zigzag {

namespace {

double scale_of(const Triangle3& t, const Point3& p) {
  double s = 1.0;
  for (int i = 0; i < 3; ++i) s = std::max(s, norm(t.vertex(i).vec()));
  return std::max(s, norm(p.vec()));
}

Vec3 unit(Vec3 v) { return (1.0 / norm(v)) * v; }

struct Candidate {
  double alpha;
  double beta;
};

Candidate evaluate_axis(Vec3 w, Vec3 n, Vec3 t) {
  const double wn = norm(w);
  const double wt = dot(w, t);
  const double c = std::clamp(wt / wn, -1.0, 1.0);
  const double perp2 = std::max(0.0, dot(w, w) - wt * wt);
  double beta = 0.0;
  if (perp2 > 1e-24 * dot(w, w)) {
    beta = std::acos(std::clamp(std::abs(dot(w, n)) / std::sqrt(perp2), 0.0, 1.0));
  }
  return {std::acos(c), beta};
}

}  // namespace

Point3::Point3(double x, double y, double z) : v_{x, y, z} {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
    throw Error(Errc::NonFinite, "point coordinates must be finite");
  }
}

Triangle3::Triangle3(Point3 a, Point3 b, Point3 c) : v_{a, b, c} {
  const Vec3 e1 = b.vec() - a.vec();
  const Vec3 e2 = c.vec() - a.vec();
  const double area2 = norm(cross(e1, e2));
  if (!(area2 > 1e-14 * norm(e1) * norm(e2))) {
    throw Error(Errc::DegenerateTriangle, "triangle vertices are collinear");
  }
}

Vec3 Triangle3::normal() const {
  return unit(cross(v_[1].vec() - v_[0].vec(), v_[2].vec() - v_[0].vec()));
}

ClosestPoint3 closest_point_on_triangle(const Triangle3& t, const Point3& p) {
  // Voronoi-region walk over vertices, edges and the face.
  const Vec3 a = t.vertex(0).vec();
  const Vec3 b = t.vertex(1).vec();
  const Vec3 c = t.vertex(2).vec();
  const Vec3 q = p.vec();
  const Vec3 ab = b - a;
  const Vec3 ac = c - a;

  ClosestPoint3 out{};
  const Vec3 ap = q - a;
  const double d1 = dot(ab, ap);
  const double d2 = dot(ac, ap);
  const Vec3 bp = q - b;
  const double d3 = dot(ab, bp);
  const double d4 = dot(ac, bp);
  const Vec3 cp = q - c;
  const double d5 = dot(ab, cp);
  const double d6 = dot(ac, cp);
  const double vc = d1 * d4 - d3 * d2;
  const double vb = d5 * d2 - d1 * d6;
  const double va = d3 * d6 - d5 * d4;

  if (d1 <= 0 && d2 <= 0) {
    out = {a, {TriangleFeature::Vertex, 0}};
  } else if (d3 >= 0 && d4 <= d3) {
    out = {b, {TriangleFeature::Vertex, 1}};
  } else if (d6 >= 0 && d5 <= d6) {
    out = {c, {TriangleFeature::Vertex, 2}};
  } else if (vc <= 0 && d1 >= 0 && d3 <= 0) {
    out = {a + (d1 / (d1 - d3)) * ab, {TriangleFeature::Edge, 0}};
  } else if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    out = {b + w * (c - b), {TriangleFeature::Edge, 1}};
  } else if (vb <= 0 && d2 >= 0 && d6 <= 0) {
    out = {a + (d2 / (d2 - d6)) * ac, {TriangleFeature::Edge, 2}};
  } else {
    const double denom = 1.0 / (va + vb + vc);
    out = {a + (vb * denom) * ab + (vc * denom) * ac, {TriangleFeature::Face, 0}};
  }

  if (norm(q - out.point) <= 1e-12 * scale_of(t, p)) {
    throw Error(Errc::PointOnFace, "target lies on the triangle");
  }
  return out;
}

OrientedDistance3 oriented_distance3(const Triangle3& t, const Point3& p) {
  const ClosestPoint3 cp = closest_point_on_triangle(t, p);
  const Vec3 w = p.vec() - cp.point;
  const Vec3 n = t.normal();
  OrientedDistance3 out{dot(w, w), std::numbers::pi / 2, 0.0, cp.feature,
                        cp.feature.kind != TriangleFeature::Face};

  std::array<Vec3, 2> axes{};
  switch (cp.feature.kind) {
    case TriangleFeature::Face:
      return out;
    case TriangleFeature::Edge: {
      const int i = cp.feature.index;
      const Vec3 s = unit(t.vertex((i + 1) % 3).vec() - t.vertex(i).vec());
      axes = {s, -1.0 * s};
      break;
    }
    case TriangleFeature::Vertex: {
      const int i = cp.feature.index;
      const Vec3 v = t.vertex(i).vec();
      axes = {unit(t.vertex((i + 1) % 3).vec() - v), unit(t.vertex((i + 2) % 3).vec() - v)};
      break;
    }
  }

  std::optional<Candidate> best;
  for (const Vec3& axis : axes) {
    const Candidate c = evaluate_axis(w, n, axis);
    if (!best || c.alpha < best->alpha - kOd3Tolerance ||
        (std::abs(c.alpha - best->alpha) <= kOd3Tolerance && c.beta < best->beta)) {
      best = c;
    }
  }
  out.alpha = best->alpha;
  out.beta = best->beta;
  return out;
}

Ordering3 od3_compare(const OrientedDistance3& a, const OrientedDistance3& b) {
  const auto cmp = [](double x, double y) -> std::optional<Ordering3> {
    if (x < y - kOd3Tolerance) return Ordering3::Less;
    if (x > y + kOd3Tolerance) return Ordering3::Greater;
    return std::nullopt;
  };
  if (auto o = cmp(a.d2, b.d2)) return *o;
  if (auto o = cmp(a.alpha, b.alpha)) return *o;
  if (auto o = cmp(a.beta, b.beta)) return *o;
  return Ordering3::Equal;
}

}  // namespace zigzag
