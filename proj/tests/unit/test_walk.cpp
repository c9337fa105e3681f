#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"
#include "zigzag/meshgen.hpp"
#include "zigzag/oracle.hpp"
#include "zigzag/trace_io.hpp"
#include "zigzag/walk.hpp"

using namespace zigzag;
using test::find_halfedge;

namespace {

LocateOutput traced(const Mesh& m, HalfEdgeId e, const Point2& p, TieBreakPolicy policy = TieBreakPolicy::right_first()) {
  WalkConfig cfg;
  cfg.policy = policy;
  cfg.record_trace = true;
  return locate(m, e, p, cfg);
}

std::vector<HalfEdgeId> edges_of(const WalkTrace& t) {
  std::vector<HalfEdgeId> out;
  for (const auto& s : t.steps) out.push_back(s.edge);
  return out;
}

bool has_kind(const std::vector<AuditViolation>& v, AuditViolation::Kind k) {
  return std::any_of(v.begin(), v.end(), [k](const AuditViolation& a) { return a.kind == k; });
}

}  // namespace

TEST(Successors, LeftRunsToTipRightFromTip) {
  // Bottom edge e1->e2 of face (e1, e2, c): l runs e1->c, r runs c->e2.
  const Mesh m = test::kite_mesh();
  const HalfEdgeId e = find_halfedge(m, 0, 1);
  const Successors s = successors(m, e);
  EXPECT_EQ(s.left, find_halfedge(m, 0, 2));
  EXPECT_EQ(s.right, find_halfedge(m, 2, 1));
  EXPECT_NE(m.face(s.left), m.face(e));
  EXPECT_NE(m.face(s.right), m.face(e));
  EXPECT_THROW(successors(m, find_halfedge(m, 1, 0)), Error);
}

TEST(Bootstrap, Examples) {
  const Mesh m = test::unit_square();
  const HalfEdgeId e = find_halfedge(m, 0, 2);  // diagonal (0,0)->(1,1)
  EXPECT_EQ(bootstrap(m, e, {0.25, 0.75}), e);
  EXPECT_EQ(bootstrap(m, e, {0.75, 0.25}), m.inv(e));
  try {
    bootstrap(m, e, {0.5, 0.5});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::PointOnEdge);
  }
  // Target outside the hull behind a boundary edge.
  try {
    bootstrap(m, find_halfedge(m, 0, 1), {0.5, -1});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::BoundaryStart);
  }
}

TEST(Locate, SingleTriangleInteriorIsImmediate) {
  const Mesh m = test::single_triangle();
  const auto o = traced(m, find_halfedge(m, 0, 1), {0.5, 0.5});
  EXPECT_EQ(o.result.outcome, WalkOutcome::Found);
  EXPECT_EQ(o.result.steps, 0u);
  EXPECT_EQ(o.result.face, face_id(0));
  EXPECT_EQ(link_distance_stats(m, *o.trace).atomic_ops, 0u);
  // Same point from the boundary twin: one bootstrap inversion.
  const auto b = traced(m, find_halfedge(m, 1, 0), {0.5, 0.5});
  EXPECT_EQ(b.result.outcome, WalkOutcome::Found);
  const LinkStats s = link_distance_stats(m, *b.trace);
  EXPECT_EQ(s.steps, 0u);
  EXPECT_EQ(s.atomic_ops, 1u);
}

TEST(Locate, KiteRightFirst) {
  const Mesh m = test::kite_mesh();
  const Point2 p(0, 2);
  const HalfEdgeId start = find_halfedge(m, 0, 1);
  const SuccessorDecision first = choose_successor(m, start, p, TieBreakPolicy::right_first(), 0);
  EXPECT_EQ(first.comparison, Ordering3::Equal);
  const auto o = traced(m, start, p);
  ASSERT_EQ(o.result.outcome, WalkOutcome::Found);
  EXPECT_EQ(o.result.steps, 2u);
  EXPECT_EQ(edges_of(*o.trace), (std::vector<HalfEdgeId>{start, find_halfedge(m, 2, 1), find_halfedge(m, 2, 4)}));
  EXPECT_EQ(o.trace->steps[1].choice, StepChoice::Right);
  EXPECT_EQ(o.trace->steps[2].choice, StepChoice::Left);
  EXPECT_TRUE(brute_force_locate(m, p).contains(o.result.face));
  const LinkStats s = link_distance_stats(m, *o.trace);
  EXPECT_EQ(s.steps, 2u);
  EXPECT_EQ(s.atomic_ops, 6u);
  EXPECT_TRUE(audit_trace(m, *o.trace, p).empty());
}

TEST(Locate, KiteLeftFirstIsMirror) {
  const Mesh m = test::kite_mesh();
  const Point2 p(0, 2);
  const HalfEdgeId start = find_halfedge(m, 0, 1);
  const auto o = traced(m, start, p, TieBreakPolicy::left_first());
  ASSERT_EQ(o.result.outcome, WalkOutcome::Found);
  EXPECT_EQ(o.result.steps, 2u);
  EXPECT_EQ(edges_of(*o.trace), (std::vector<HalfEdgeId>{start, find_halfedge(m, 0, 2), find_halfedge(m, 3, 2)}));
  EXPECT_EQ(o.trace->steps[1].choice, StepChoice::Left);
  EXPECT_EQ(o.trace->steps[2].choice, StepChoice::Right);
  EXPECT_TRUE(brute_force_locate(m, p).contains(o.result.face));
  EXPECT_TRUE(audit_trace(m, *o.trace, p).empty());
}

TEST(Locate, OutsideHullReportsBoundary) {
  const Mesh m = generate({GridSpec{3, 3}});
  const auto o = traced(m, halfedge_id(0), {10, 1.5});
  EXPECT_EQ(o.result.outcome, WalkOutcome::Boundary);
  EXPECT_TRUE(m.is_boundary(o.result.edge));
  EXPECT_TRUE(audit_trace(m, *o.trace, {10, 1.5}).empty());
}

TEST(Locate, TargetOnStartEdge) {
  const Mesh m = test::unit_square();
  const HalfEdgeId d = find_halfedge(m, 0, 2);
  const auto o = traced(m, d, {0.5, 0.5});
  EXPECT_EQ(o.result.outcome, WalkOutcome::Found);
  EXPECT_EQ(o.result.steps, 0u);
  EXPECT_EQ(o.result.face, m.face(d));
  const auto b = traced(m, find_halfedge(m, 1, 0), {0.5, 0});
  EXPECT_EQ(b.result.outcome, WalkOutcome::Found);
  EXPECT_FALSE(m.is_boundary(b.result.edge));
}

TEST(Locate, CollinearStartPicksInteriorSide) {
  const Mesh m = generate({GridSpec{2, 2}});
  const HalfEdgeId e = find_halfedge(m, 0, 1);  // (0,0)->(1,0), face above
  ASSERT_FALSE(m.is_boundary(e));
  const Point2 p(1.5, 0);
  EXPECT_EQ(bootstrap(m, e, p), e);
  EXPECT_EQ(bootstrap(m, m.inv(e), p), e);
  const auto o = traced(m, m.inv(e), p);
  ASSERT_EQ(o.result.outcome, WalkOutcome::Found);
  EXPECT_TRUE(brute_force_locate(m, p).contains(o.result.face));
  EXPECT_TRUE(audit_trace(m, *o.trace, p).empty());
}

TEST(Locate, MaxStepsAborts) {
  const Mesh m = test::kite_mesh();
  WalkConfig cfg;
  cfg.max_steps = 1;
  const auto o = locate(m, find_halfedge(m, 0, 1), {0, 2}, cfg);
  EXPECT_EQ(o.result.outcome, WalkOutcome::Aborted);
  EXPECT_EQ(o.result.reason, AbortReason::MaxSteps);
  EXPECT_EQ(o.result.steps, 1u);
  cfg.max_steps = 0;
  EXPECT_THROW(locate(m, find_halfedge(m, 0, 1), {0, 2}, cfg), Error);
}

TEST(Locate, GridSuiteAgreesWithOracleAndBound) {
  const Mesh m = generate({GridSpec{10, 10}});
  SplitMix64 rng(100);
  for (int q = 0; q < 100; ++q) {
    const Point2 p = test::random_point_in_mesh(m, rng);
    const HalfEdgeId start = halfedge_id(rng.below(m.num_halfedges()));
    if (on_segment(m.segment(start), p)) continue;
    HalfEdgeId boot;
    try {
      boot = bootstrap(m, start, p);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), Errc::BoundaryStart);
      continue;
    }
    const std::size_t bound = neighborhood_size(m, boot, p);
    for (const TieBreakPolicy pol : {TieBreakPolicy::right_first(), TieBreakPolicy::left_first(),
                                      TieBreakPolicy::random_seeded(static_cast<std::uint64_t>(q))}) {
      WalkConfig cfg;
      cfg.policy = pol;
      cfg.record_trace = true;
      cfg.check_invariants = true;
      const auto o = locate(m, start, p, cfg);
      ASSERT_EQ(o.result.outcome, WalkOutcome::Found) << q;
      ASSERT_TRUE(brute_force_locate(m, p).contains(o.result.face)) << q;
      ASSERT_LE(o.result.steps, bound) << q;
      ASSERT_TRUE(audit_trace(m, *o.trace, p).empty()) << q;
    }
  }
}

TEST(Locate, RandomPolicyIsReproducible) {
  // Lattice targets on a grid make ties frequent.
  const Mesh m = generate({GridSpec{12, 12}});
  SplitMix64 rng(8);
  int differing = 0;
  for (int q = 0; q < 200; ++q) {
    const Point2 p(static_cast<double>(rng.below(24)) / 2 + 0.25, static_cast<double>(rng.below(24)) / 2 + 0.25);
    const HalfEdgeId start = halfedge_id(rng.below(3 * m.num_faces()));
    if (on_segment(m.segment(start), p)) continue;
    const auto a = traced(m, start, p, TieBreakPolicy::random_seeded(77));
    const auto b = traced(m, start, p, TieBreakPolicy::random_seeded(77));
    ASSERT_EQ(edges_of(*a.trace), edges_of(*b.trace));
    const auto r = traced(m, start, p, TieBreakPolicy::right_first());
    const auto l = traced(m, start, p, TieBreakPolicy::left_first());
    differing += edges_of(*r.trace) != edges_of(*l.trace) ? 1 : 0;
    ASSERT_EQ(r.result.outcome, WalkOutcome::Found);
    ASSERT_EQ(l.result.outcome, WalkOutcome::Found);
  }
  EXPECT_GT(differing, 0);
}

TEST(Visibility, SingleTriangleAndDeterminism) {
  const Mesh m = test::single_triangle();
  const auto v = visibility_walk(m, halfedge_id(0), {0.5, 0.5}, 1);
  EXPECT_EQ(v.result.outcome, WalkOutcome::Found);
  EXPECT_EQ(v.result.steps, 0u);

  const Mesh g = generate({GridSpec{10, 10}});
  SplitMix64 rng(5);
  for (int q = 0; q < 100; ++q) {
    const Point2 p = test::random_point_in_mesh(g, rng);
    const HalfEdgeId start = halfedge_id(rng.below(g.num_halfedges()));
    const auto a = visibility_walk(g, start, p, 42);
    const auto b = visibility_walk(g, start, p, 42);
    ASSERT_EQ(a.path, b.path);
    ASSERT_EQ(a.result.outcome, WalkOutcome::Found);
    ASSERT_TRUE(brute_force_locate(g, p).contains(a.result.face));
  }
}

TEST(Oracle, BruteForceExamples) {
  const Mesh sq = test::unit_square();
  EXPECT_EQ(brute_force_locate(sq, {0.5, 0.5}).faces.size(), 2u);
  EXPECT_TRUE(brute_force_locate(sq, {2, 2}).faces.empty());
  const Mesh t = test::single_triangle();
  const auto in = brute_force_locate(t, {0.25, 0.25});
  ASSERT_EQ(in.faces.size(), 1u);
  EXPECT_FALSE(in.on_boundary_of_hull);
  EXPECT_TRUE(brute_force_locate(t, {1, 0}).on_boundary_of_hull);
}

TEST(Audit, DetectsForgedTraces) {
  const Mesh m = test::kite_mesh();
  const Point2 p(0, 2);
  const auto o = traced(m, find_halfedge(m, 0, 1), p);

  WalkTrace swapped = *o.trace;
  std::swap(swapped.steps[1], swapped.steps[2]);
  EXPECT_TRUE(has_kind(audit_trace(m, swapped, p), AuditViolation::Kind::Connectivity));

  // Second transition replaced by the other successor, which moves away.
  WalkTrace uphill = *o.trace;
  uphill.steps[2] = {find_halfedge(m, 4, 1), StepChoice::Right, 0, 0};
  EXPECT_TRUE(has_kind(audit_trace(m, uphill, p), AuditViolation::Kind::Monotonicity));

  WalkTrace overrun = *o.trace;
  overrun.steps.push_back({m.inv(find_halfedge(m, 4, 3)), StepChoice::Right, 0, 0});
  EXPECT_TRUE(has_kind(audit_trace(m, overrun, p), AuditViolation::Kind::LoopGuard));

  WalkTrace wrong_start = *o.trace;
  wrong_start.steps[0].edge = m.inv(wrong_start.steps[0].edge);
  EXPECT_TRUE(has_kind(audit_trace(m, wrong_start, p), AuditViolation::Kind::Bootstrap));

  WalkTrace out_of_range = *o.trace;
  out_of_range.steps[1].edge = halfedge_id(999);
  EXPECT_TRUE(has_kind(audit_trace(m, out_of_range, p), AuditViolation::Kind::Range));
}

TEST(Locate, CheckedAndUncheckedAgree) {
  const Mesh m = generate({RandomDelaunaySpec{200, 4, {}}});
  SplitMix64 rng(2);
  for (int q = 0; q < 50; ++q) {
    const Point2 p = test::random_point_in_mesh(m, rng);
    const HalfEdgeId start = halfedge_id(rng.below(3 * m.num_faces()));
    WalkConfig checked;
    checked.check_invariants = true;
    const auto a = locate(m, start, p, checked);
    const auto b = locate(m, start, p);
    ASSERT_EQ(a.result.face, b.result.face);
    ASSERT_EQ(a.result.steps, b.result.steps);
  }
}

TEST(TraceIo, RoundTrip) {
  const Mesh m = test::kite_mesh();
  const auto o = traced(m, find_halfedge(m, 0, 1), {0, 2});
  std::ostringstream out;
  write_trace_json(*o.trace, o.result, out);
  std::istringstream in(out.str());
  const TraceDocument doc = read_trace_json(in);
  EXPECT_EQ(doc.trace.target, o.trace->target);
  EXPECT_EQ(doc.trace.start, o.trace->start);
  EXPECT_EQ(edges_of(doc.trace), edges_of(*o.trace));
  for (std::size_t k = 0; k < doc.trace.steps.size(); ++k) {
    EXPECT_EQ(doc.trace.steps[k].choice, o.trace->steps[k].choice);
  }
  EXPECT_EQ(doc.result.outcome, o.result.outcome);
  EXPECT_EQ(doc.result.face, o.result.face);
  EXPECT_EQ(doc.result.steps, o.result.steps);
  std::ostringstream again;
  write_trace_json(doc.trace, doc.result, again);
  EXPECT_EQ(again.str(), out.str());
}

TEST(TraceIo, RejectsMalformed) {
  std::istringstream in(R"({"point": [0, 0], "start": 0, "steps": [{"edge": 0, "choice": "Q"}]})");
  EXPECT_THROW(read_trace_json(in), Error);
}
