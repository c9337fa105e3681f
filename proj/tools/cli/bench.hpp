#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zigzag/mesh.hpp"

namespace zigzag::cli {

struct BenchOptions {
  std::size_t queries = 100;
  std::uint64_t seed = 0;
  /// Any of "right", "left", "random".
  std::vector<std::string> policies{"right", "left", "random"};
  bool visibility_baseline = false;
  unsigned jobs = 1;
};

struct BenchRow {
  std::string policy;
  std::size_t queries = 0;
  double mean_steps = 0;
  double median_steps = 0;
  std::size_t max_steps = 0;
  double mean_atomic_ops = 0;
  /// steps / neighborhood size; negative when not applicable (baseline).
  double max_utilization = -1;
  double mean_utilization = -1;
  std::size_t oracle_agreement = 0;
};

/// k queries at uniform points of uniformly chosen faces, each starting from
/// a uniformly chosen interior half-edge. Every policy sees the same queries.
std::vector<BenchRow> run_bench(const Mesh& m, const BenchOptions& opts);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace zigzag::cli
