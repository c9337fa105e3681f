#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zigzag/geometry2d.hpp"
#include "zigzag/mesh.hpp"

namespace zigzag {

/// How the walk resolves od(l, p) == od(r, p).
class TieBreakPolicy {
 public:
  enum class Kind { RightFirst, LeftFirst, RandomSeeded };

  static constexpr TieBreakPolicy right_first() { return TieBreakPolicy(Kind::RightFirst, 0); }
  static constexpr TieBreakPolicy left_first() { return TieBreakPolicy(Kind::LeftFirst, 0); }
  static constexpr TieBreakPolicy random_seeded(std::uint64_t seed) {
    return TieBreakPolicy(Kind::RandomSeeded, seed);
  }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr std::uint64_t seed() const noexcept { return seed_; }

  /// True if a tie at the given step goes left. Random decisions depend only
  /// on (seed, step), so equal seeds reproduce identical walks.
  bool tie_goes_left(std::size_t step) const noexcept;

 private:
  constexpr TieBreakPolicy(Kind k, std::uint64_t s) : kind_(k), seed_(s) {}

  Kind kind_;
  std::uint64_t seed_;
};

struct WalkConfig {
  TieBreakPolicy policy = TieBreakPolicy::right_first();
  /// Safety guard; nullopt means |E| + 1. Must be >= 1 when set.
  std::optional<std::size_t> max_steps;
  bool record_trace = false;
  /// Assert the half-space and monotonicity properties at every step; a violation
  /// throws Errc::InvariantViolation.
  bool check_invariants = false;
};

enum class StepChoice { Bootstrap, Left, Right };

struct WalkStep {
  HalfEdgeId edge;
  StepChoice choice;
  /// Display copy; d2 = 0 and alpha = 0 when the target lies on the edge.
  double d2;
  double alpha;
};

struct WalkTrace {
  Point2 target;
  HalfEdgeId start;
  /// steps[0] is the bootstrapped start edge; each later entry is one face
  /// transition.
  std::vector<WalkStep> steps;

  std::size_t transitions() const { return steps.empty() ? 0 : steps.size() - 1; }
};

enum class WalkOutcome { Found, Boundary, Aborted };
enum class AbortReason { None, MaxSteps };

struct WalkResult {
  WalkOutcome outcome;
  /// Found: face containing the target. Otherwise kOuterFace.
  FaceId face;
  /// Found: the goal half-edge. Boundary: the boundary half-edge the walk
  /// would have crossed into the outer face. Aborted: the current edge.
  HalfEdgeId edge;
  std::size_t steps;
  AbortReason reason = AbortReason::None;
};

const char* to_string(WalkOutcome o) noexcept;
const char* to_string(StepChoice c) noexcept;

struct Successors {
  HalfEdgeId left;   // inv(prev(e)), runs e1 -> tip
  HalfEdgeId right;  // inv(next(e)), runs tip -> e2
};

/// Throws Errc::OuterFace if e is a boundary half-edge.
Successors successors(const Mesh& m, HalfEdgeId e);

/// Returns e if p is strictly left of e and inv(e) if strictly right. When p
/// is collinear with e but off the segment, returns whichever of e / inv(e)
/// has an interior face. Throws PointOnEdge, or BoundaryStart if the side
/// containing p is the outer face.
HalfEdgeId bootstrap(const Mesh& m, HalfEdgeId e, const Point2& p);

struct SuccessorDecision {
  StepChoice choice;
  Ordering3 comparison;  // od(l, p) vs od(r, p)
  HalfEdgeId edge;
};

/// One walk step: compare the two successors of e and pick one.
/// p must lie outside the closed face of e.
SuccessorDecision choose_successor(const Mesh& m, HalfEdgeId e, const Point2& p,
                                   const TieBreakPolicy& policy, std::size_t step);

struct LocateOutput {
  WalkResult result;
  std::optional<WalkTrace> trace;
};

/// Oblivious zig-zag walk from e_init towards p.
LocateOutput locate(const Mesh& m, HalfEdgeId e_init, const Point2& p, const WalkConfig& cfg = {});

struct VisibilityResult {
  WalkResult result;
  std::size_t atomic_ops;
  /// Half-edges through which each face was entered, in order.
  std::vector<HalfEdgeId> path;
};

/// Remembering stochastic visibility walk, used as a benchmark baseline.
VisibilityResult visibility_walk(const Mesh& m, HalfEdgeId e_init, const Point2& p, std::uint64_t seed,
                                 std::optional<std::size_t> max_steps = std::nullopt);

}  // namespace zigzag
