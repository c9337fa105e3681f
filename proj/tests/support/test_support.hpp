#pragma once

#include <gmpxx.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "zigzag/geometry2d.hpp"
#include "zigzag/mesh.hpp"
#include "zigzag/random.hpp"

namespace zigzag::test {

inline std::string data_path(const std::string& name) { return std::string(ZIGZAG_TEST_DATA_DIR) + "/" + name; }

// Independent exact oracle for the oriented distance. It computes the
// closest point as a rational point from the projection parameter and keys
// the angle by cos^2 over the full |w|^2 |u|^2, unlike the library which
// classifies first and normalizes by |u|^2 only.
struct ExactOd {
  mpq_class d2;
  mpq_class cos2;  // (w.u)^2 / (|w|^2 |u|^2); larger means larger alpha
};

inline ExactOd exact_od(const Segment2& s, const Point2& p) {
  const mpq_class ax = s.a().x(), ay = s.a().y(), bx = s.b().x(), by = s.b().y();
  const mpq_class px = p.x(), py = p.y();
  const mpq_class dx = bx - ax, dy = by - ay;
  mpq_class t = ((px - ax) * dx + (py - ay) * dy) / (dx * dx + dy * dy);
  mpq_class qx, qy, ux, uy;
  if (t <= 0) {
    qx = ax, qy = ay, ux = dx, uy = dy;
  } else if (t >= 1) {
    qx = bx, qy = by, ux = -dx, uy = -dy;
  } else {
    qx = ax + t * dx, qy = ay + t * dy, ux = dx, uy = dy;
  }
  const mpq_class wx = px - qx, wy = py - qy;
  const mpq_class ww = wx * wx + wy * wy;
  const mpq_class wu = wx * ux + wy * uy;
  return {ww, (t > 0 && t < 1) ? mpq_class(0) : wu * wu / (ww * (ux * ux + uy * uy))};
}

inline Ordering3 exact_od_compare(const Segment2& a, const Segment2& b, const Point2& p) {
  const ExactOd x = exact_od(a, p);
  const ExactOd y = exact_od(b, p);
  if (x.d2 != y.d2) return x.d2 < y.d2 ? Ordering3::Less : Ordering3::Greater;
  if (x.cos2 != y.cos2) return x.cos2 < y.cos2 ? Ordering3::Less : Ordering3::Greater;
  return Ordering3::Equal;
}

/// Floating (d, alpha) with trigonometry, for the cross-check property.
struct TrigOd {
  double d;
  double alpha;
};

inline TrigOd trig_od(const Segment2& s, const Point2& p) {
  const double ax = s.a().x(), ay = s.a().y(), bx = s.b().x(), by = s.b().y();
  const double dx = bx - ax, dy = by - ay;
  const double t = ((p.x() - ax) * dx + (p.y() - ay) * dy) / (dx * dx + dy * dy);
  if (t > 0 && t < 1) {
    const double qx = ax + t * dx, qy = ay + t * dy;
    return {std::hypot(p.x() - qx, p.y() - qy), std::numbers::pi / 2};
  }
  const bool start = t <= 0;
  const double qx = start ? ax : bx, qy = start ? ay : by;
  const double ux = start ? dx : -dx, uy = start ? dy : -dy;
  const double wx = p.x() - qx, wy = p.y() - qy;
  const double ang = std::abs(std::atan2(wx * uy - wy * ux, wx * ux + wy * uy));
  return {std::hypot(wx, wy), ang};
}

/// Coordinates on a 1/64 lattice in [-range, range]: exact binary64 values
/// that make ties and collinearities common.
inline double lattice(SplitMix64& rng, int range) {
  const auto steps = static_cast<std::uint64_t>(range) * 128 + 1;
  return (static_cast<double>(rng.below(steps)) - range * 64.0) / 64.0;
}

inline Point2 lattice_point(SplitMix64& rng, int range) { return {lattice(rng, range), lattice(rng, range)}; }

/// Kite mesh: a bottom edge e1->e2, centre c and two top vertices,
/// with the target above c. Faces: (e1,e2,c), (e1,c,t1), (e2,t2,c), (c,t2,t1).
inline Mesh kite_mesh() {
  std::vector<Point2> pts{{-5, -3}, {5, -3}, {0, 0}, {-5, 3}, {5, 3}};
  const std::vector<Triangle> tris{{0, 1, 2}, {0, 2, 3}, {1, 4, 2}, {2, 4, 3}};
  return Mesh::build_from_triangles(std::move(pts), tris);
}

inline Mesh single_triangle() {
  std::vector<Point2> pts{{0, 0}, {2, 0}, {0, 2}};
  const std::vector<Triangle> tris{{0, 1, 2}};
  return Mesh::build_from_triangles(std::move(pts), tris);
}

inline Mesh unit_square() {
  std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const std::vector<Triangle> tris{{0, 1, 2}, {0, 2, 3}};
  return Mesh::build_from_triangles(std::move(pts), tris);
}

/// Half-edge a->b, or kNoHalfEdge.
inline HalfEdgeId find_halfedge(const Mesh& m, std::size_t a, std::size_t b) {
  for (std::size_t h = 0; h < m.num_halfedges(); ++h) {
    const HalfEdgeId e = halfedge_id(h);
    if (to_index(m.origin(e)) == a && to_index(m.destination(e)) == b) return e;
  }
  return kNoHalfEdge;
}

/// Uniform point inside a uniformly chosen face.
inline Point2 random_point_in_mesh(const Mesh& m, SplitMix64& rng) {
  const auto t = m.face_points(face_id(rng.below(m.num_faces())));
  double r1 = rng.uniform(), r2 = rng.uniform();
  if (r1 + r2 > 1) {
    r1 = 1 - r1;
    r2 = 1 - r2;
  }
  return {t[0].x() + r1 * (t[1].x() - t[0].x()) + r2 * (t[2].x() - t[0].x()),
          t[0].y() + r1 * (t[1].y() - t[0].y()) + r2 * (t[2].y() - t[0].y())};
}

}  // namespace zigzag::test
