#include <benchmark/benchmark.h>

#include <vector>

#include "zigzag/meshgen.hpp"
#include "zigzag/oracle.hpp"
#include "zigzag/random.hpp"
#include "zigzag/walk.hpp"

using namespace zigzag;

namespace {

struct Query {
  HalfEdgeId start;
  Point2 p;
};

const Mesh& delaunay_mesh(std::size_t n) {
  static std::vector<std::pair<std::size_t, Mesh>> cache;
  for (const auto& [k, m] : cache) {
    if (k == n) return m;
  }
  cache.emplace_back(n, generate({RandomDelaunaySpec{n, 99, {}}}));
  return cache.back().second;
}

std::vector<Query> make_queries(const Mesh& m, std::size_t count) {
  SplitMix64 rng(5);
  std::vector<Query> qs;
  while (qs.size() < count) {
    const FaceId f = face_id(rng.below(m.num_faces()));
    const auto t = m.face_points(f);
    double a = rng.uniform(0, 1), b = rng.uniform(0, 1);
    if (a + b > 1) {
      a = 1 - a;
      b = 1 - b;
    }
    const Point2 p(t[0].x() + a * (t[1].x() - t[0].x()) + b * (t[2].x() - t[0].x()),
                   t[0].y() + a * (t[1].y() - t[0].y()) + b * (t[2].y() - t[0].y()));
    qs.push_back({halfedge_id(rng.below(m.num_halfedges())), p});
  }
  return qs;
}

void BM_Locate(benchmark::State& state, TieBreakPolicy policy) {
  const Mesh& m = delaunay_mesh(static_cast<std::size_t>(state.range(0)));
  const auto qs = make_queries(m, 256);
  WalkConfig cfg;
  cfg.policy = policy;
  std::size_t i = 0, steps = 0;
  for (auto _ : state) {
    const Query& q = qs[i++ % qs.size()];
    const auto out = locate(m, q.start, q.p, cfg);
    steps += out.result.steps;
    benchmark::DoNotOptimize(out.result.face);
  }
  state.counters["steps"] = benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kAvgIterations);
}

void BM_Visibility(benchmark::State& state) {
  const Mesh& m = delaunay_mesh(static_cast<std::size_t>(state.range(0)));
  const auto qs = make_queries(m, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    const Query& q = qs[i % qs.size()];
    benchmark::DoNotOptimize(visibility_walk(m, q.start, q.p, i, m.num_halfedges() * 4).result.face);
    ++i;
  }
}

void BM_BruteForce(benchmark::State& state) {
  const Mesh& m = delaunay_mesh(static_cast<std::size_t>(state.range(0)));
  const auto qs = make_queries(m, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_locate(m, qs[i++ % qs.size()].p).faces.size());
}

void BM_OdCompare(benchmark::State& state) {
  SplitMix64 rng(11);
  std::vector<std::pair<Segment2, Segment2>> pairs;
  std::vector<Point2> pts;
  for (int k = 0; k < 1024; ++k) {
    const auto pt = [&] { return Point2(rng.uniform(-1, 1), rng.uniform(-1, 1)); };
    pairs.emplace_back(Segment2(pt(), pt()), Segment2(pt(), pt()));
    pts.push_back(Point2(rng.uniform(2, 3), rng.uniform(2, 3)));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ % pairs.size();
    benchmark::DoNotOptimize(od_compare(pairs[k].first, pairs[k].second, pts[k]));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Locate, right_first, TieBreakPolicy::right_first())->Arg(1000)->Arg(10000);
BENCHMARK_CAPTURE(BM_Locate, left_first, TieBreakPolicy::left_first())->Arg(1000)->Arg(10000);
BENCHMARK_CAPTURE(BM_Locate, random, TieBreakPolicy::random_seeded(7))->Arg(1000)->Arg(10000);
BENCHMARK(BM_Visibility)->Arg(1000)->Arg(10000);
BENCHMARK(BM_BruteForce)->Arg(1000)->Arg(10000);
BENCHMARK(BM_OdCompare);
BENCHMARK_MAIN();
