#pragma once

#include <string>
#include <vector>

#include "zigzag/mesh.hpp"
#include "zigzag/walk.hpp"

namespace zigzag {

struct LocationAnswer {
  /// Every interior face whose closed triangle contains p, ascending.
  std::vector<FaceId> faces;
  /// p lies on a boundary edge of the mesh.
  bool on_boundary_of_hull = false;

  bool contains(FaceId f) const;
};

/// Exhaustive exact point-in-triangle scan over all faces.
LocationAnswer brute_force_locate(const Mesh& m, const Point2& p);

struct AuditViolation {
  enum class Kind { Range, Bootstrap, Connectivity, HalfSpace, Monotonicity, LoopGuard };
  Kind kind;
  std::size_t step;
  std::string message;
};

const char* to_string(AuditViolation::Kind k) noexcept;

/// Re-checks a recorded walk with exact arithmetic: the bootstrap step, that
/// consecutive edges are successor-linked as labelled, that p is strictly
/// left of every edge after the start, that the oriented distance strictly
/// decreases, and that no step left a face already containing p.
std::vector<AuditViolation> audit_trace(const Mesh& m, const WalkTrace& trace, const Point2& p);

struct LinkStats {
  std::size_t steps;
  std::size_t atomic_ops;
};

/// Link distance of a walk. Each face transition costs three atomic
/// relations (next and prev to reach the two candidate sides, one inv to
/// cross); the bootstrap inversion adds one when it happens.
LinkStats link_distance_stats(const Mesh& m, const WalkTrace& trace);

}  // namespace zigzag
