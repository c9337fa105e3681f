#include "zigzag/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "geometry_internal.hpp"

namespace zigzag {

namespace {

std::uint64_t edge_key(std::size_t a, std::size_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

std::string name(const char* kind, std::size_t id) { return std::string(kind) + " " + std::to_string(id); }

void check_duplicate_points(std::span<const Point2> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  const auto less = [&](std::size_t i, std::size_t j) {
    const Point2& a = points[i];
    const Point2& b = points[j];
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points[order[k - 1]] == points[order[k]]) {
      throw Error(Errc::DuplicateVertex, "vertices " + std::to_string(std::min(order[k - 1], order[k])) +
                                             " and " + std::to_string(std::max(order[k - 1], order[k])) +
                                             " coincide");
    }
  }
}

}  // namespace

Mesh Mesh::build_from_triangles(std::vector<Point2> points, std::span<const Triangle> triangles) {
  check_duplicate_points(points);

  std::vector<Triangle> tris(triangles.begin(), triangles.end());
  for (std::size_t t = 0; t < tris.size(); ++t) {
    auto& tri = tris[t];
    for (std::size_t v : tri) {
      if (v >= points.size()) {
        throw Error(Errc::IndexOutOfRange,
                    "triangle " + std::to_string(t) + " references vertex " + std::to_string(v));
      }
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      throw Error(Errc::DegenerateFace, "triangle " + std::to_string(t) + " repeats a vertex");
    }
    const int o = orientation(points[tri[0]], points[tri[1]], points[tri[2]]);
    if (o == 0) throw Error(Errc::DegenerateFace, "triangle " + std::to_string(t) + " has zero area");
    if (o < 0) std::swap(tri[1], tri[2]);
  }

  {
    std::unordered_map<std::uint64_t, int> uses;
    uses.reserve(tris.size() * 3);
    for (std::size_t t = 0; t < tris.size(); ++t) {
      for (int i = 0; i < 3; ++i) {
        const std::size_t a = tris[t][i];
        const std::size_t b = tris[t][(i + 1) % 3];
        if (++uses[edge_key(std::min(a, b), std::max(a, b))] > 2) {
          throw Error(Errc::NonManifold, "edge (" + std::to_string(std::min(a, b)) + ", " +
                                             std::to_string(std::max(a, b)) +
                                             ") is shared by more than two triangles");
        }
      }
    }
    std::vector<Triangle> sorted = tris;
    for (auto& tri : sorted) std::sort(tri.begin(), tri.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(Errc::NonManifold, "a triangle is listed more than once");
    }
  }

  Mesh m;
  m.points_ = std::move(points);
  m.faces_.reserve(tris.size());
  m.halfedges_.reserve(tris.size() * 3 + tris.size());

  std::unordered_map<std::uint64_t, std::size_t> directed;
  directed.reserve(tris.size() * 3);
  for (std::size_t t = 0; t < tris.size(); ++t) {
    m.faces_.push_back(halfedge_id(3 * t));
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t a = tris[t][i];
      const std::size_t b = tris[t][(i + 1) % 3];
      if (!directed.emplace(edge_key(a, b), 3 * t + i).second) {
        throw Error(Errc::InconsistentOrientation,
                    "directed edge " + std::to_string(a) + "->" + std::to_string(b) +
                        " appears in two triangles (overlapping faces)");
      }
      m.halfedges_.push_back(HalfEdgeRecord{vertex_id(a), kNoHalfEdge, halfedge_id(3 * t + (i + 1) % 3),
                                            face_id(t)});
    }
  }

  const std::size_t interior = m.halfedges_.size();
  for (std::size_t h = 0; h < interior; ++h) {
    if (m.halfedges_[h].twin != kNoHalfEdge) continue;
    const std::size_t a = to_index(m.halfedges_[h].origin);
    const std::size_t b = to_index(m.halfedges_[to_index(m.halfedges_[h].next)].origin);
    const auto it = directed.find(edge_key(b, a));
    if (it != directed.end()) {
      m.halfedges_[h].twin = halfedge_id(it->second);
      m.halfedges_[it->second].twin = halfedge_id(h);
    } else {
      const std::size_t boundary = m.halfedges_.size();
      m.halfedges_.push_back(HalfEdgeRecord{vertex_id(b), halfedge_id(h), kNoHalfEdge, kOuterFace});
      m.halfedges_[h].twin = halfedge_id(boundary);
    }
  }
  return m;
}

Mesh Mesh::from_raw(std::vector<Point2> points, std::vector<HalfEdgeRecord> halfedges,
                    std::vector<HalfEdgeId> faces) {
  Mesh m;
  m.points_ = std::move(points);
  m.halfedges_ = std::move(halfedges);
  m.faces_ = std::move(faces);
  return m;
}

const Point2& Mesh::point(VertexId v) const {
  if (to_index(v) >= points_.size()) {
    throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(to_index(v)));
  }
  return points_[to_index(v)];
}

const HalfEdgeRecord& Mesh::record(HalfEdgeId e) const {
  if (to_index(e) >= halfedges_.size()) {
    throw Error(Errc::IndexOutOfRange, "halfedge " + std::to_string(to_index(e)));
  }
  return halfedges_[to_index(e)];
}

HalfEdgeId Mesh::next(HalfEdgeId e) const {
  const HalfEdgeRecord& r = record(e);
  if (r.face == kOuterFace) {
    throw Error(Errc::OuterFace, "halfedge " + std::to_string(to_index(e)) + " borders the outer face");
  }
  return r.next;
}

HalfEdgeId Mesh::face_edge(FaceId f) const {
  if (to_index(f) >= faces_.size()) throw Error(Errc::IndexOutOfRange, "face " + std::to_string(to_index(f)));
  return faces_[to_index(f)];
}

std::array<VertexId, 3> Mesh::face_vertices(FaceId f) const {
  const HalfEdgeId e0 = face_edge(f);
  const HalfEdgeId e1 = next(e0);
  const HalfEdgeId e2 = next(e1);
  return {origin(e0), origin(e1), origin(e2)};
}

std::array<Point2, 3> Mesh::face_points(FaceId f) const {
  const auto v = face_vertices(f);
  return {point(v[0]), point(v[1]), point(v[2])};
}

std::vector<Triangle> Mesh::triangles() const {
  std::vector<Triangle> out;
  out.reserve(faces_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto v = face_vertices(face_id(f));
    out.push_back({to_index(v[0]), to_index(v[1]), to_index(v[2])});
  }
  return out;
}

const char* to_string(Violation::Rule rule) noexcept {
  using R = Violation::Rule;
  switch (rule) {
    case R::VertexNonFinite: return "VertexNonFinite";
    case R::DuplicateVertex: return "DuplicateVertex";
    case R::OriginRange: return "OriginRange";
    case R::TwinRange: return "TwinRange";
    case R::TwinSelf: return "TwinSelf";
    case R::TwinInvolution: return "TwinInvolution";
    case R::TwinEndpoints: return "TwinEndpoints";
    case R::NextRange: return "NextRange";
    case R::NextCycle: return "NextCycle";
    case R::FaceConstancy: return "FaceConstancy";
    case R::FaceRange: return "FaceRange";
    case R::FaceEdge: return "FaceEdge";
    case R::FaceOrientation: return "FaceOrientation";
    case R::EdgeMultiplicity: return "EdgeMultiplicity";
  }
  return "?";
}

std::vector<Violation> validate(const Mesh& m) {
  using R = Violation::Rule;
  std::vector<Violation> out;
  const auto points = m.points();
  const auto hes = m.halfedges();
  const auto faces = m.faces();
  const std::size_t nv = points.size();
  const std::size_t nh = hes.size();
  const std::size_t nf = faces.size();

  for (std::size_t v = 0; v < nv; ++v) {
    if (!std::isfinite(points[v].x()) || !std::isfinite(points[v].y())) {
      out.push_back({R::VertexNonFinite, name("vertex", v), "non-finite coordinate"});
    }
  }
  try {
    check_duplicate_points(points);
  } catch (const Error& e) {
    out.push_back({R::DuplicateVertex, "vertices", e.what()});
  }

  const auto in_h = [&](HalfEdgeId e) { return to_index(e) < nh; };
  std::vector<bool> usable(nh, false);
  for (std::size_t h = 0; h < nh; ++h) {
    const HalfEdgeRecord& r = hes[h];
    bool ok = true;
    if (to_index(r.origin) >= nv) {
      out.push_back({R::OriginRange, name("halfedge", h), "origin out of range"});
      ok = false;
    }
    if (!in_h(r.twin)) {
      out.push_back({R::TwinRange, name("halfedge", h), "twin out of range"});
      ok = false;
    } else if (to_index(r.twin) == h) {
      out.push_back({R::TwinSelf, name("halfedge", h), "twin is the half-edge itself"});
      ok = false;
    } else if (hes[to_index(r.twin)].twin != halfedge_id(h)) {
      out.push_back({R::TwinInvolution, name("halfedge", h), "twin(twin(e)) != e"});
      ok = false;
    }
    if (r.face != kOuterFace) {
      if (to_index(r.face) >= nf) {
        out.push_back({R::FaceRange, name("halfedge", h), "face out of range"});
        ok = false;
      }
      if (!in_h(r.next)) {
        out.push_back({R::NextRange, name("halfedge", h), "next out of range"});
        ok = false;
      }
    }
    usable[h] = ok;
  }

  for (std::size_t h = 0; h < nh; ++h) {
    if (!usable[h]) continue;
    const HalfEdgeRecord& r = hes[h];
    if (r.face == kOuterFace) continue;
    const HalfEdgeId n1 = r.next;
    if (!usable[to_index(n1)]) continue;
    if (hes[to_index(n1)].origin != hes[to_index(r.twin)].origin) {
      out.push_back({R::TwinEndpoints, name("halfedge", h), "origin(twin(e)) != origin(next(e))"});
    }
    if (hes[to_index(n1)].face != r.face) {
      out.push_back({R::FaceConstancy, name("halfedge", h), "face(next(e)) != face(e)"});
      continue;
    }
    const HalfEdgeId n2 = hes[to_index(n1)].next;
    if (!in_h(n2) || !in_h(hes[to_index(n2)].next) || hes[to_index(n2)].next != halfedge_id(h)) {
      out.push_back({R::NextCycle, name("halfedge", h), "next(next(next(e))) != e"});
    }
  }

  for (std::size_t f = 0; f < nf; ++f) {
    const HalfEdgeId e = faces[f];
    if (!in_h(e) || hes[to_index(e)].face != face_id(f)) {
      out.push_back({R::FaceEdge, name("face", f), "incident half-edge does not belong to the face"});
      continue;
    }
    const HalfEdgeId e1 = hes[to_index(e)].next;
    if (!in_h(e1)) continue;
    const HalfEdgeId e2 = hes[to_index(e1)].next;
    if (!in_h(e2)) continue;
    const std::size_t a = to_index(hes[to_index(e)].origin);
    const std::size_t b = to_index(hes[to_index(e1)].origin);
    const std::size_t c = to_index(hes[to_index(e2)].origin);
    if (a >= nv || b >= nv || c >= nv) continue;
    if (orientation(points[a], points[b], points[c]) <= 0) {
      out.push_back({R::FaceOrientation, name("face", f), "face is not strictly counter-clockwise"});
    }
  }

  std::unordered_map<std::uint64_t, int> uses;
  for (std::size_t h = 0; h < nh; ++h) {
    if (!usable[h] || !usable[to_index(hes[h].twin)]) continue;
    const std::size_t a = to_index(hes[h].origin);
    const std::size_t b = to_index(hes[to_index(hes[h].twin)].origin);
    if (++uses[edge_key(std::min(a, b), std::max(a, b))] == 3) {
      out.push_back({R::EdgeMultiplicity, name("halfedge", h),
                     "undirected edge carried by more than two half-edges"});
    }
  }
  return out;
}

std::size_t neighborhood_size(const Mesh& m, HalfEdgeId e, const Point2& p) {
  const Segment2 ref = m.segment(e);
  if (on_segment(ref, p)) {
    throw Error(Errc::PointOnEdge, "target lies on halfedge " + std::to_string(to_index(e)));
  }
  // Twins share their geometry, so scan undirected edges and count two.
  // A segment through p has d = 0 and compares Less without special casing.
  std::size_t count = 0;
  const auto hes = m.halfedges();
  for (std::size_t h = 0; h < hes.size(); ++h) {
    const std::size_t t = to_index(hes[h].twin);
    if (t < h) continue;
    const Segment2 s(m.point(hes[h].origin), m.point(hes[t].origin));
    if (detail::od_compare_unchecked(s, ref, p) != Ordering3::Greater) count += 2;
  }
  return count;
}

}  // namespace zigzag
