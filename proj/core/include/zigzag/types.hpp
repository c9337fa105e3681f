#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace zigzag {

// Dense indices into the mesh arrays. Enum classes keep the three id spaces
// from being mixed up without any runtime cost.
enum class VertexId : std::uint32_t {};
enum class HalfEdgeId : std::uint32_t {};
enum class FaceId : std::uint32_t {};

/// Face id carried by boundary half-edges of a finite mesh.
inline constexpr FaceId kOuterFace{std::numeric_limits<std::uint32_t>::max()};
inline constexpr HalfEdgeId kNoHalfEdge{std::numeric_limits<std::uint32_t>::max()};

constexpr std::size_t to_index(VertexId v) noexcept { return static_cast<std::size_t>(v); }
constexpr std::size_t to_index(HalfEdgeId e) noexcept { return static_cast<std::size_t>(e); }
constexpr std::size_t to_index(FaceId f) noexcept { return static_cast<std::size_t>(f); }

constexpr VertexId vertex_id(std::size_t i) noexcept { return static_cast<VertexId>(i); }
constexpr HalfEdgeId halfedge_id(std::size_t i) noexcept { return static_cast<HalfEdgeId>(i); }
constexpr FaceId face_id(std::size_t i) noexcept { return static_cast<FaceId>(i); }

enum class Errc {
  NonFinite,
  DegenerateSegment,
  PointOnEdge,
  DegenerateTriangle,
  IndexOutOfRange,
  NonManifold,
  DuplicateVertex,
  DegenerateFace,
  InconsistentOrientation,
  OuterFace,
  BoundaryStart,
  InvariantViolation,
  SpecInvalid,
  PointOnFace,
  Parse,
};

const char* to_string(Errc code) noexcept;

/// The single exception type thrown by the library; `code()` says which
/// contract was broken.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zigzag
