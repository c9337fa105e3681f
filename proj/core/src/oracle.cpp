#include "zigzag/oracle.hpp"

#include <algorithm>

#include "geometry_internal.hpp"

namespace zigzag {

bool LocationAnswer::contains(FaceId f) const { return std::binary_search(faces.begin(), faces.end(), f); }

LocationAnswer brute_force_locate(const Mesh& m, const Point2& p) {
  LocationAnswer out;
  for (std::size_t f = 0; f < m.num_faces(); ++f) {
    const auto t = m.face_points(face_id(f));
    if (point_in_triangle(t[0], t[1], t[2], p)) out.faces.push_back(face_id(f));
  }
  for (std::size_t h = 0; h < m.num_halfedges(); ++h) {
    if (m.is_boundary(halfedge_id(h)) && on_segment(m.segment(halfedge_id(h)), p)) {
      out.on_boundary_of_hull = true;
      break;
    }
  }
  return out;
}

const char* to_string(AuditViolation::Kind k) noexcept {
  using K = AuditViolation::Kind;
  switch (k) {
    case K::Range: return "Range";
    case K::Bootstrap: return "Bootstrap";
    case K::Connectivity: return "Connectivity";
    case K::HalfSpace: return "HalfSpace";
    case K::Monotonicity: return "Monotonicity";
    case K::LoopGuard: return "LoopGuard";
  }
  return "?";
}

std::vector<AuditViolation> audit_trace(const Mesh& m, const WalkTrace& trace, const Point2& p) {
  using K = AuditViolation::Kind;
  std::vector<AuditViolation> out;
  const auto& steps = trace.steps;
  if (steps.empty()) {
    out.push_back({K::Range, 0, "trace has no steps"});
    return out;
  }
  if (to_index(trace.start) >= m.num_halfedges()) {
    out.push_back({K::Range, 0, "start edge out of range"});
    return out;
  }
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (to_index(steps[k].edge) >= m.num_halfedges()) {
      out.push_back({K::Range, k, "edge " + std::to_string(to_index(steps[k].edge)) + " out of range"});
      return out;
    }
  }

  // Bootstrap step.
  {
    const HalfEdgeId start = trace.start;
    const Segment2 s = m.segment(start);
    HalfEdgeId expected = start;
    if (on_segment(s, p)) {
      if (m.is_boundary(start)) expected = m.inv(start);
    } else {
      const int o = orientation(s.a(), s.b(), p);
      if (o < 0 || (o == 0 && m.is_boundary(start))) expected = m.inv(start);
    }
    if (steps[0].choice != StepChoice::Bootstrap || steps[0].edge != expected) {
      out.push_back({K::Bootstrap, 0, "first step is not the bootstrapped start edge"});
    }
    const Segment2 b = m.segment(steps[0].edge);
    if (!on_segment(b, p) && orientation(b.a(), b.b(), p) < 0) {
      out.push_back({K::HalfSpace, 0, "target right of the bootstrapped edge"});
    }
  }

  for (std::size_t k = 1; k < steps.size(); ++k) {
    const HalfEdgeId prev = steps[k - 1].edge;
    const HalfEdgeId cur = steps[k].edge;
    if (m.is_boundary(prev)) {
      out.push_back({K::Connectivity, k, "walk continued from a boundary half-edge"});
      continue;
    }
    const Successors succ = successors(m, prev);
    const bool linked = (steps[k].choice == StepChoice::Left && cur == succ.left) ||
                        (steps[k].choice == StepChoice::Right && cur == succ.right);
    if (!linked) {
      out.push_back({K::Connectivity, k,
                     "edge " + std::to_string(to_index(cur)) + " is not the labelled successor of " +
                         std::to_string(to_index(prev))});
    }
    const auto tri = m.face_points(m.face(prev));
    if (point_in_triangle(tri[0], tri[1], tri[2], p)) {
      out.push_back({K::LoopGuard, k, "walk left a face that already contains the target"});
      continue;
    }
    const Segment2 sc = m.segment(cur);
    if (orientation(sc.a(), sc.b(), p) <= 0) {
      out.push_back({K::HalfSpace, k, "target not strictly left of edge " + std::to_string(to_index(cur))});
    }
    const Segment2 sp = m.segment(prev);
    if (on_segment(sc, p) || on_segment(sp, p) ||
        detail::od_compare_unchecked(sc, sp, p) != Ordering3::Less) {
      out.push_back({K::Monotonicity, k, "oriented distance did not strictly decrease"});
    }
  }
  return out;
}

LinkStats link_distance_stats(const Mesh& m, const WalkTrace& trace) {
  (void)m;
  if (trace.steps.empty()) return {0, 0};
  const std::size_t steps = trace.transitions();
  const std::size_t bootstrap = trace.steps.front().edge != trace.start ? 1 : 0;
  return {steps, 3 * steps + bootstrap};
}

}  // namespace zigzag
