#include "bench.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>

#include "zigzag/oracle.hpp"
#include "zigzag/random.hpp"
#include "zigzag/walk.hpp"

namespace zigzag::cli {

namespace {

struct Query {
  Point2 p;
  HalfEdgeId start;
  std::size_t neighborhood;  // 0 when p lies on the start edge
};

struct Sample {
  std::size_t steps = 0;
  std::size_t ops = 0;
  bool agrees = false;
};

std::vector<Query> make_queries(const Mesh& m, const BenchOptions& opts) {
  SplitMix64 rng(opts.seed);
  std::vector<Query> qs;
  qs.reserve(opts.queries);
  for (std::size_t i = 0; i < opts.queries; ++i) {
    const auto tri = m.face_points(face_id(rng.below(m.num_faces())));
    double r1 = rng.uniform();
    double r2 = rng.uniform();
    if (r1 + r2 > 1.0) {
      r1 = 1.0 - r1;
      r2 = 1.0 - r2;
    }
    const Point2 p(tri[0].x() + r1 * (tri[1].x() - tri[0].x()) + r2 * (tri[2].x() - tri[0].x()),
                   tri[0].y() + r1 * (tri[1].y() - tri[0].y()) + r2 * (tri[2].y() - tri[0].y()));
    const HalfEdgeId start = halfedge_id(rng.below(3 * m.num_faces()));
    qs.push_back({p, start, 0});
  }
  return qs;
}

template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([=, &fn, &errors] {
        try {
          for (std::size_t i = j; i < n; i += jobs) fn(i);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

bool agrees(const Mesh& m, const WalkResult& r, const Point2& p) {
  return r.outcome == WalkOutcome::Found && brute_force_locate(m, p).contains(r.face);
}

BenchRow summarize(std::string name, const std::vector<Sample>& samples, const std::vector<Query>& qs,
                   bool with_bound) {
  BenchRow row;
  row.policy = std::move(name);
  row.queries = samples.size();
  if (samples.empty()) return row;
  std::vector<std::size_t> steps;
  double util_sum = 0;
  double util_max = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& s = samples[i];
    steps.push_back(s.steps);
    row.mean_steps += static_cast<double>(s.steps);
    row.mean_atomic_ops += static_cast<double>(s.ops);
    row.max_steps = std::max(row.max_steps, s.steps);
    row.oracle_agreement += s.agrees ? 1 : 0;
    const double u = qs[i].neighborhood == 0
                         ? 0.0
                         : static_cast<double>(s.steps) / static_cast<double>(qs[i].neighborhood);
    util_sum += u;
    util_max = std::max(util_max, u);
  }
  const double n = static_cast<double>(samples.size());
  row.mean_steps /= n;
  row.mean_atomic_ops /= n;
  std::sort(steps.begin(), steps.end());
  const std::size_t mid = steps.size() / 2;
  row.median_steps = steps.size() % 2 ? static_cast<double>(steps[mid])
                                      : 0.5 * static_cast<double>(steps[mid - 1] + steps[mid]);
  if (with_bound) {
    row.max_utilization = util_max;
    row.mean_utilization = util_sum / n;
  }
  return row;
}

TieBreakPolicy policy_for(const std::string& name, std::uint64_t seed) {
  if (name == "right") return TieBreakPolicy::right_first();
  if (name == "left") return TieBreakPolicy::left_first();
  if (name == "random") return TieBreakPolicy::random_seeded(seed);
  throw Error(Errc::SpecInvalid, "unknown policy '" + name + "'");
}

}  // namespace

std::vector<BenchRow> run_bench(const Mesh& m, const BenchOptions& opts) {
  if (m.num_faces() == 0) throw Error(Errc::SpecInvalid, "mesh has no faces");
  for (const auto& name : opts.policies) policy_for(name, 0);

  std::vector<Query> qs = make_queries(m, opts);
  parallel_for(qs.size(), opts.jobs, [&](std::size_t i) {
    Query& q = qs[i];
    if (on_segment(m.segment(q.start), q.p)) return;
    q.neighborhood = neighborhood_size(m, bootstrap(m, q.start, q.p), q.p);
  });

  std::vector<BenchRow> rows;
  for (const auto& name : opts.policies) {
    std::vector<Sample> samples(qs.size());
    parallel_for(qs.size(), opts.jobs, [&](std::size_t i) {
      const Query& q = qs[i];
      WalkConfig cfg;
      cfg.policy = policy_for(name, hash_pair(opts.seed, i));
      cfg.record_trace = true;
      const LocateOutput o = locate(m, q.start, q.p, cfg);
      samples[i] = {o.result.steps, link_distance_stats(m, *o.trace).atomic_ops, agrees(m, o.result, q.p)};
    });
    rows.push_back(summarize(name, samples, qs, true));
  }
  if (opts.visibility_baseline) {
    std::vector<Sample> samples(qs.size());
    parallel_for(qs.size(), opts.jobs, [&](std::size_t i) {
      const Query& q = qs[i];
      const VisibilityResult v = visibility_walk(m, q.start, q.p, hash_pair(~opts.seed, i));
      samples[i] = {v.result.steps, v.atomic_ops, agrees(m, v.result, q.p)};
    });
    rows.push_back(summarize("visibility", samples, qs, false));
  }
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "policy,queries,mean_steps,median_steps,max_steps,mean_atomic_ops,max_bound_utilization,"
         "mean_bound_utilization,oracle_agreement\n";
  char buf[512];
  for (const BenchRow& r : rows) {
    std::string util = "NA,NA";
    if (r.max_utilization >= 0) {
      char u[128];
      std::snprintf(u, sizeof u, "%.6f,%.6f", r.max_utilization, r.mean_utilization);
      util = u;
    }
    std::snprintf(buf, sizeof buf, "%s,%zu,%.4f,%.1f,%zu,%.4f,%s,%zu\n", r.policy.c_str(), r.queries,
                  r.mean_steps, r.median_steps, r.max_steps, r.mean_atomic_ops, util.c_str(),
                  r.oracle_agreement);
    out << buf;
  }
}

}  // namespace zigzag::cli
