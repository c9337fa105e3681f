#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "bench.hpp"
#include "svg.hpp"
#include "zigzag/mesh_io.hpp"
#include "zigzag/meshgen.hpp"
#include "zigzag/oracle.hpp"
#include "zigzag/trace_io.hpp"
#include "zigzag/walk.hpp"

namespace zigzag::cli {

namespace {

std::vector<double> parse_numbers(const std::string& text, std::size_t count, const std::string& what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (out.size() < count) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    double v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) break;
    out.push_back(v);
    pos = end + 1;
    if (end == text.size()) break;
  }
  if (out.size() != count || pos <= text.size()) {
    throw Error(Errc::Parse, what + " must be " + std::to_string(count) + " comma-separated numbers, got '" +
                                 text + "'");
  }
  return out;
}

struct GenFlags {
  std::string kind;
  std::optional<std::size_t> n;
  std::optional<std::size_t> ny;
  std::uint64_t seed = 0;
  double aspect = 1000.0;
  double span = std::numbers::pi / 2;
  double scale = 1.0;
  std::string bbox = "0,0,1,1";
};

void add_gen_flags(CLI::App& app, GenFlags& f, bool required) {
  auto* kind = app.add_option("--kind", f.kind, "Mesh family")->check(CLI::IsMember({"grid", "delaunay", "fan", "strip"}));
  if (required) kind->required();
  app.add_option("--n", f.n, "Size: grid cells per side, points, or triangles");
  app.add_option("--ny", f.ny, "Grid rows (default: --n)");
  app.add_option("--seed", f.seed, "Random seed (delaunay)");
  app.add_option("--aspect", f.aspect, "Strip height over unit base");
  app.add_option("--span", f.span, "Fan angle in radians; 2*pi closes the fan");
  app.add_option("--scale", f.scale, "Uniform coordinate scale (grid, fan, strip)");
  app.add_option("--bbox", f.bbox, "x0,y0,x1,y1 for delaunay points");
}

GenSpec to_spec(const GenFlags& f) {
  GenSpec spec;
  spec.scale = f.scale;
  if (f.kind == "grid") {
    const std::size_t n = f.n.value_or(10);
    spec.kind = GridSpec{n, f.ny.value_or(n)};
  } else if (f.kind == "delaunay") {
    const auto b = parse_numbers(f.bbox, 4, "--bbox");
    spec.kind = RandomDelaunaySpec{f.n.value_or(100), f.seed, BBox{b[0], b[1], b[2], b[3]}};
  } else if (f.kind == "fan") {
    spec.kind = FanSpec{f.n.value_or(8), f.span};
  } else {
    spec.kind = ThinStripSpec{f.n.value_or(10), f.aspect};
  }
  return spec;
}

// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::Parse, "cannot open '" + path + "' for writing");
  write(file);
  if (!file) throw Error(Errc::Parse, "failed writing '" + path + "'");
}

TraceDocument load_trace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
  return read_trace_json(in);
}

TieBreakPolicy make_policy(const std::string& name, std::uint64_t seed) {
  if (name == "left") return TieBreakPolicy::left_first();
  if (name == "random") return TieBreakPolicy::random_seeded(seed);
  return TieBreakPolicy::right_first();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Point location by zig-zag walks on planar triangulations", "zigzag"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a mesh and write it as JSON");
  GenFlags gen_flags;
  std::string gen_out;
  add_gen_flags(*gen, gen_flags, true);
  gen->add_option("--out", gen_out, "Output file (default: stdout)");

  // locate
  auto* loc = app.add_subcommand("locate", "Run one walk");
  std::string loc_mesh, loc_point, loc_policy = "right", loc_trace;
  std::size_t loc_start = 0;
  std::uint64_t loc_seed = 0;
  std::optional<std::size_t> loc_max;
  bool loc_check = false;
  loc->add_option("mesh", loc_mesh, "Mesh file (.json or .off)")->required();
  loc->add_option("--point", loc_point, "Target as x,y")->required();
  loc->add_option("--start", loc_start, "Start half-edge id");
  loc->add_option("--policy", loc_policy, "Tie-break policy")->check(CLI::IsMember({"right", "left", "random"}));
  loc->add_option("--seed", loc_seed, "Seed for --policy random");
  loc->add_option("--trace", loc_trace, "Write the walk trace as JSON");
  loc->add_option("--max-steps", loc_max, "Abort after this many transitions");
  loc->add_flag("--check", loc_check, "Check the walk invariants at every step and audit the trace");

  // svg
  auto* svg = app.add_subcommand("svg", "Render a mesh and a walk trace");
  std::string svg_mesh, svg_trace, svg_out;
  svg->add_option("mesh", svg_mesh, "Mesh file")->required();
  svg->add_option("trace", svg_trace, "Trace JSON from locate --trace")->required();
  svg->add_option("--out", svg_out, "Output file (default: stdout)");

  // validate
  auto* val = app.add_subcommand("validate", "Check mesh invariants");
  std::string val_mesh;
  val->add_option("mesh", val_mesh, "Mesh file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Random queries per policy, CSV report");
  std::string bench_mesh, bench_out, bench_policies = "right,left,random", bench_baseline;
  GenFlags bench_gen;
  BenchOptions bopts;
  auto* mesh_opt = bench->add_option("--mesh", bench_mesh, "Mesh file");
  add_gen_flags(*bench, bench_gen, false);
  bench->get_option("--kind")->excludes(mesh_opt);
  bench->add_option("--queries", bopts.queries, "Queries per policy");
  bench->add_option("--policies", bench_policies, "Comma-separated subset of right,left,random");
  bench->add_option("--baseline", bench_baseline, "Extra baseline row")->check(CLI::IsMember({"visibility"}));
  bench->add_option("--jobs", bopts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_out, "Output file (default: stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*gen) {
      const Mesh m = generate(to_spec(gen_flags));
      emit(gen_out, out, [&](std::ostream& os) { write_mesh_json(m, os); });
      return kOk;
    }

    if (*loc) {
      const auto xy = parse_numbers(loc_point, 2, "--point");
      const Point2 p(xy[0], xy[1]);
      const Mesh m = load_mesh(loc_mesh);
      WalkConfig cfg;
      cfg.policy = make_policy(loc_policy, loc_seed);
      cfg.max_steps = loc_max;
      cfg.record_trace = loc_check || !loc_trace.empty();
      cfg.check_invariants = loc_check;
      const LocateOutput o = locate(m, halfedge_id(loc_start), p, cfg);
      if (!loc_trace.empty()) {
        emit(loc_trace, out, [&](std::ostream& os) { write_trace_json(*o.trace, o.result, os); });
      }
      const WalkResult& r = o.result;
      out << to_string(r.outcome);
      if (r.outcome == WalkOutcome::Found) out << " face=" << to_index(r.face);
      out << " edge=" << to_index(r.edge) << " steps=" << r.steps;
      if (r.outcome == WalkOutcome::Aborted) out << " reason=max_steps";
      out << '\n';
      if (loc_check) {
        const auto violations = audit_trace(m, *o.trace, p);
        for (const auto& v : violations) {
          err << "audit: " << to_string(v.kind) << " at step " << v.step << ": " << v.message << '\n';
        }
        if (!violations.empty()) return kDomainError;
      }
      return r.outcome == WalkOutcome::Aborted ? kDomainError : kOk;
    }

    if (*svg) {
      const Mesh m = load_mesh(svg_mesh);
      const TraceDocument doc = load_trace(svg_trace);
      std::ostringstream buf;
      render_svg(m, doc, buf);
      emit(svg_out, out, [&](std::ostream& os) { os << buf.str(); });
      return kOk;
    }

    if (*val) {
      const Mesh m = load_mesh(val_mesh);
      const auto violations = validate(m);
      for (const auto& v : violations) {
        out << "VIOLATION " << to_string(v.rule) << ' ' << v.element << ": " << v.message << '\n';
      }
      if (!violations.empty()) return kDomainError;
      out << "OK vertices=" << m.num_vertices() << " halfedges=" << m.num_halfedges()
          << " faces=" << m.num_faces() << '\n';
      return kOk;
    }

    if (*bench) {
      if (bench_mesh.empty() && bench_gen.kind.empty()) {
        err << "bench: one of --mesh or --kind is required\n";
        return kUsageError;
      }
      const Mesh m = bench_mesh.empty() ? generate(to_spec(bench_gen)) : load_mesh(bench_mesh);
      bopts.seed = bench_gen.seed;
      bopts.policies = split_list(bench_policies);
      bopts.visibility_baseline = bench_baseline == "visibility";
      const auto rows = run_bench(m, bopts);
      emit(bench_out, out, [&](std::ostream& os) { write_bench_csv(rows, os); });
      for (const auto& r : rows) {
        if (r.oracle_agreement != r.queries) {
          err << "bench: " << r.policy << " disagreed with the oracle on " << (r.queries - r.oracle_agreement)
              << " of " << r.queries << " queries\n";
          return kDomainError;
        }
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace zigzag::cli
