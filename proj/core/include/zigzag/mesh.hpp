#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zigzag/geometry2d.hpp"
#include "zigzag/types.hpp"

namespace zigzag {

using Triangle = std::array<std::size_t, 3>;

struct HalfEdgeRecord {
  VertexId origin;
  HalfEdgeId twin;
  HalfEdgeId next;  // kNoHalfEdge on boundary half-edges
  FaceId face;      // kOuterFace on boundary half-edges

  friend bool operator==(const HalfEdgeRecord&, const HalfEdgeRecord&) = default;
};

/// Indexed half-edge triangulation of a finite region.
///
/// Interior face f owns half-edges 3f, 3f+1, 3f+2 in CCW order; boundary
/// half-edges follow and carry kOuterFace. prev is not stored: on a triangle
/// it is next(next(e)). Immutable after construction.
class Mesh {
 public:
  Mesh() = default;

  /// Builds the half-edge structure. Clockwise input triangles are flipped.
  /// Throws IndexOutOfRange, DuplicateVertex, DegenerateFace, NonManifold or
  /// InconsistentOrientation.
  static Mesh build_from_triangles(std::vector<Point2> points, std::span<const Triangle> triangles);

  /// Wraps raw arrays without any checking. Meant for tooling and for
  /// exercising validate() on broken input.
  static Mesh from_raw(std::vector<Point2> points, std::vector<HalfEdgeRecord> halfedges,
                       std::vector<HalfEdgeId> faces);

  std::size_t num_vertices() const noexcept { return points_.size(); }
  std::size_t num_halfedges() const noexcept { return halfedges_.size(); }
  std::size_t num_faces() const noexcept { return faces_.size(); }
  std::size_t num_edges() const noexcept { return halfedges_.size() / 2; }

  std::span<const Point2> points() const noexcept { return points_; }
  std::span<const HalfEdgeRecord> halfedges() const noexcept { return halfedges_; }
  std::span<const HalfEdgeId> faces() const noexcept { return faces_; }

  const Point2& point(VertexId v) const;
  const HalfEdgeRecord& record(HalfEdgeId e) const;

  HalfEdgeId inv(HalfEdgeId e) const { return record(e).twin; }
  /// Throws Errc::OuterFace on boundary half-edges.
  HalfEdgeId next(HalfEdgeId e) const;
  HalfEdgeId prev(HalfEdgeId e) const { return next(next(e)); }
  FaceId face(HalfEdgeId e) const { return record(e).face; }
  bool is_boundary(HalfEdgeId e) const { return face(e) == kOuterFace; }

  VertexId origin(HalfEdgeId e) const { return record(e).origin; }
  VertexId destination(HalfEdgeId e) const { return origin(inv(e)); }
  std::pair<VertexId, VertexId> endpoints(HalfEdgeId e) const { return {origin(e), destination(e)}; }
  Segment2 segment(HalfEdgeId e) const { return Segment2(point(origin(e)), point(destination(e))); }

  HalfEdgeId face_edge(FaceId f) const;
  std::array<VertexId, 3> face_vertices(FaceId f) const;
  std::array<Point2, 3> face_points(FaceId f) const;

  /// Interior faces as vertex triples, in face order.
  std::vector<Triangle> triangles() const;

 private:
  std::vector<Point2> points_;
  std::vector<HalfEdgeRecord> halfedges_;
  std::vector<HalfEdgeId> faces_;
};

struct Violation {
  enum class Rule {
    VertexNonFinite,
    DuplicateVertex,
    OriginRange,
    TwinRange,
    TwinSelf,
    TwinInvolution,
    TwinEndpoints,
    NextRange,
    NextCycle,
    FaceConstancy,
    FaceRange,
    FaceEdge,
    FaceOrientation,
    EdgeMultiplicity,
  };
  Rule rule;
  std::string element;  // e.g. "halfedge 7", "face 2"
  std::string message;
};

const char* to_string(Violation::Rule rule) noexcept;

/// Empty iff every mesh invariant holds.
std::vector<Violation> validate(const Mesh& m);

/// Number of half-edges whose oriented distance to p is <= that of e
/// (exhaustive exact scan). Half-edges through p count as distance zero.
/// Throws Errc::PointOnEdge if p lies on e itself.
std::size_t neighborhood_size(const Mesh& m, HalfEdgeId e, const Point2& p);

}  // namespace zigzag
