#include "zigzag/walk.hpp"

#include <string>

#include "geometry_internal.hpp"
#include "zigzag/random.hpp"

namespace zigzag {

namespace {

std::string edge_name(HalfEdgeId e) { return "halfedge " + std::to_string(to_index(e)); }

// Closed-face test for the face left of e, whose orientation is known.
bool in_closed_face(const Mesh& m, HalfEdgeId e, const Point2& p) {
  const HalfEdgeId n = m.next(e);
  const Point2& a = m.point(m.origin(e));
  const Point2& b = m.point(m.origin(n));
  const Point2& c = m.point(m.origin(m.next(n)));
  return orientation(a, b, p) >= 0 && orientation(b, c, p) >= 0 && orientation(c, a, p) >= 0;
}

WalkStep snapshot(const Mesh& m, HalfEdgeId e, StepChoice choice, const Point2& p) {
  const Segment2 s = m.segment(e);
  if (on_segment(s, p)) return {e, choice, 0.0, 0.0};
  const OrientedDistance od = oriented_distance(s, p);
  return {e, choice, od.d2, od.alpha_display};
}

}  // namespace

bool TieBreakPolicy::tie_goes_left(std::size_t step) const noexcept {
  switch (kind_) {
    case Kind::RightFirst: return false;
    case Kind::LeftFirst: return true;
    case Kind::RandomSeeded: return (hash_pair(seed_, step) >> 63) != 0;
  }
  return false;
}

const char* to_string(WalkOutcome o) noexcept {
  switch (o) {
    case WalkOutcome::Found: return "FOUND";
    case WalkOutcome::Boundary: return "BOUNDARY";
    case WalkOutcome::Aborted: return "ABORTED";
  }
  return "?";
}

const char* to_string(StepChoice c) noexcept {
  switch (c) {
    case StepChoice::Bootstrap: return "B";
    case StepChoice::Left: return "L";
    case StepChoice::Right: return "R";
  }
  return "?";
}

Successors successors(const Mesh& m, HalfEdgeId e) {
  const HalfEdgeId n = m.next(e);  // throws OuterFace on the boundary
  const HalfEdgeId pr = m.next(n);
  return {m.inv(pr), m.inv(n)};
}

HalfEdgeId bootstrap(const Mesh& m, HalfEdgeId e, const Point2& p) {
  const Segment2 s = m.segment(e);
  if (on_segment(s, p)) throw Error(Errc::PointOnEdge, "target lies on " + edge_name(e));
  const int o = orientation(s.a(), s.b(), p);
  HalfEdgeId out = e;
  if (o < 0) {
    out = m.inv(e);
  } else if (o == 0 && m.is_boundary(e)) {
    out = m.inv(e);
  }
  if (m.is_boundary(out)) {
    throw Error(Errc::BoundaryStart, "target is on the outer side of " + edge_name(e));
  }
  return out;
}

SuccessorDecision choose_successor(const Mesh& m, HalfEdgeId e, const Point2& p,
                                   const TieBreakPolicy& policy, std::size_t step) {
  const Successors s = successors(m, e);
  const Ordering3 cmp = detail::od_compare_unchecked(m.segment(s.left), m.segment(s.right), p);
  bool left = cmp == Ordering3::Less;
  if (cmp == Ordering3::Equal) left = policy.tie_goes_left(step);
  return {left ? StepChoice::Left : StepChoice::Right, cmp, left ? s.left : s.right};
}

LocateOutput locate(const Mesh& m, HalfEdgeId e_init, const Point2& p, const WalkConfig& cfg) {
  if (cfg.max_steps && *cfg.max_steps < 1) throw Error(Errc::SpecInvalid, "max_steps must be at least 1");
  const std::size_t max_steps = cfg.max_steps.value_or(m.num_halfedges() + 1);

  LocateOutput out{WalkResult{WalkOutcome::Found, kOuterFace, e_init, 0}, std::nullopt};
  if (cfg.record_trace) out.trace = WalkTrace{p, e_init, {}};
  const auto record = [&](HalfEdgeId e, StepChoice c) {
    if (out.trace) out.trace->steps.push_back(snapshot(m, e, c, p));
  };

  const Segment2 s0 = m.segment(e_init);
  if (on_segment(s0, p)) {
    // Closed faces: either side containing the edge will do.
    const HalfEdgeId e = m.is_boundary(e_init) ? m.inv(e_init) : e_init;
    record(e, StepChoice::Bootstrap);
    out.result = {WalkOutcome::Found, m.face(e), e, 0};
    return out;
  }

  // Put p strictly left of e, or on its line with e interior.
  HalfEdgeId e = e_init;
  const int o = orientation(s0.a(), s0.b(), p);
  if (o < 0 || (o == 0 && m.is_boundary(e_init))) e = m.inv(e_init);
  record(e, StepChoice::Bootstrap);
  if (m.is_boundary(e)) {
    out.result = {WalkOutcome::Boundary, kOuterFace, e, 0};
    return out;
  }

  std::size_t steps = 0;
  while (!in_closed_face(m, e, p)) {
    if (steps == max_steps) {
      out.result = {WalkOutcome::Aborted, kOuterFace, e, steps, AbortReason::MaxSteps};
      return out;
    }
    const SuccessorDecision d = choose_successor(m, e, p, cfg.policy, steps);
    if (cfg.check_invariants) {
      const Segment2 next_seg = m.segment(d.edge);
      if (orientation(next_seg.a(), next_seg.b(), p) <= 0) {
        throw Error(Errc::InvariantViolation,
                    "half-space: target not strictly left of " + edge_name(d.edge));
      }
      if (detail::od_compare_unchecked(next_seg, m.segment(e), p) != Ordering3::Less) {
        throw Error(Errc::InvariantViolation,
                    "monotonicity: oriented distance did not decrease at " + edge_name(d.edge));
      }
    }
    if (m.is_boundary(d.edge)) {
      out.result = {WalkOutcome::Boundary, kOuterFace, d.edge, steps};
      return out;
    }
    e = d.edge;
    ++steps;
    record(e, d.choice);
  }
  out.result = {WalkOutcome::Found, m.face(e), e, steps};
  return out;
}

VisibilityResult visibility_walk(const Mesh& m, HalfEdgeId e_init, const Point2& p, std::uint64_t seed,
                                 std::optional<std::size_t> max_steps) {
  const std::size_t limit = max_steps.value_or(4 * m.num_halfedges() + 1);
  VisibilityResult out{{WalkOutcome::Found, kOuterFace, e_init, 0}, 0, {}};

  HalfEdgeId e = e_init;
  if (m.is_boundary(e)) {
    e = m.inv(e);
    ++out.atomic_ops;
  }
  HalfEdgeId entered = kNoHalfEdge;
  std::size_t steps = 0;
  for (;;) {
    const HalfEdgeId e1 = m.next(e);
    const HalfEdgeId e2 = m.next(e1);
    out.atomic_ops += 2;
    const HalfEdgeId sides[3] = {e, e1, e2};
    const std::size_t first = hash_pair(seed, steps) % 3;
    HalfEdgeId crossed = kNoHalfEdge;
    for (std::size_t i = 0; i < 3; ++i) {
      const HalfEdgeId h = sides[(first + i) % 3];
      if (h == entered) continue;
      if (orientation(m.point(m.origin(h)), m.point(m.destination(h)), p) < 0) {
        crossed = h;
        break;
      }
    }
    if (crossed == kNoHalfEdge) {
      out.result = {WalkOutcome::Found, m.face(e), e, steps};
      return out;
    }
    if (steps == limit) {
      out.result = {WalkOutcome::Aborted, kOuterFace, e, steps, AbortReason::MaxSteps};
      return out;
    }
    const HalfEdgeId t = m.inv(crossed);
    ++out.atomic_ops;
    if (m.is_boundary(t)) {
      out.result = {WalkOutcome::Boundary, kOuterFace, t, steps};
      return out;
    }
    e = t;
    entered = t;
    ++steps;
    out.path.push_back(t);
  }
}

}  // namespace zigzag
