#include <cmath>
#include <string>

#include "zigzag/meshgen.hpp"
#include "zigzag/random.hpp"

namespace zigzag {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::SpecInvalid, what);
}

Mesh make_grid(const GridSpec& g, double s) {
  require(g.nx >= 1 && g.ny >= 1, "grid dimensions must be positive");
  std::vector<Point2> pts;
  pts.reserve((g.nx + 1) * (g.ny + 1));
  for (std::size_t j = 0; j <= g.ny; ++j) {
    for (std::size_t i = 0; i <= g.nx; ++i) pts.emplace_back(s * static_cast<double>(i), s * static_cast<double>(j));
  }
  const auto id = [&](std::size_t i, std::size_t j) { return j * (g.nx + 1) + i; };
  std::vector<Triangle> tris;
  tris.reserve(2 * g.nx * g.ny);
  for (std::size_t j = 0; j < g.ny; ++j) {
    for (std::size_t i = 0; i < g.nx; ++i) {
      tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tris.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return Mesh::build_from_triangles(std::move(pts), tris);
}

Mesh make_delaunay(const RandomDelaunaySpec& d) {
  require(d.n_points >= 3, "random Delaunay needs at least three points");
  require(d.bbox.x1 > d.bbox.x0 && d.bbox.y1 > d.bbox.y0, "bbox must have positive extent");
  SplitMix64 rng(d.seed);
  std::vector<Point2> pts;
  pts.reserve(d.n_points);
  for (std::size_t i = 0; i < d.n_points; ++i) {
    const double x = rng.uniform(d.bbox.x0, d.bbox.x1);
    const double y = rng.uniform(d.bbox.y0, d.bbox.y1);
    pts.emplace_back(x, y);
  }
  return delaunay_triangulation(pts);
}

Mesh make_fan(const FanSpec& f, double s) {
  constexpr double kTwoPi = 2 * std::numbers::pi;
  // Spans within a few ulps of 2*pi (as typed on a command line) close the fan.
  const bool closed = std::abs(f.span - kTwoPi) <= 1e-12 * kTwoPi;
  require(f.span > 0 && (f.span < kTwoPi || closed), "fan span must lie in (0, 2*pi]");
  require(f.n >= (closed ? 3u : 1u), "fan needs at least one triangle (three when closed)");
  require(f.span / static_cast<double>(f.n) < std::numbers::pi, "fan triangles must have apex angle below pi");

  std::vector<Point2> pts;
  pts.emplace_back(0.0, 0.0);
  const std::size_t rim = closed ? f.n : f.n + 1;
  for (std::size_t k = 0; k < rim; ++k) {
    const double a = (closed ? kTwoPi : f.span) * static_cast<double>(k) / static_cast<double>(f.n);
    pts.emplace_back(s * std::cos(a), s * std::sin(a));
  }
  std::vector<Triangle> tris;
  for (std::size_t k = 0; k < f.n; ++k) {
    tris.push_back({0, 1 + k, 1 + (k + 1) % rim});
  }
  return Mesh::build_from_triangles(std::move(pts), tris);
}

Mesh make_strip(const ThinStripSpec& t, double s) {
  require(t.n >= 1, "strip needs at least one triangle");
  require(t.aspect > 0 && std::isfinite(t.aspect), "strip aspect must be positive");
  const std::size_t nb = (t.n + 1) / 2 + 1;
  const std::size_t nt = t.n / 2 + 1;
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < nb; ++i) pts.emplace_back(s * static_cast<double>(i), 0.0);
  for (std::size_t i = 0; i < nt; ++i) pts.emplace_back(s * (static_cast<double>(i) + 0.5), s * t.aspect);
  const auto bottom = [](std::size_t i) { return i; };
  const auto top = [nb](std::size_t i) { return nb + i; };
  std::vector<Triangle> tris;
  for (std::size_t k = 0; k < t.n; ++k) {
    const std::size_t i = k / 2;
    if (k % 2 == 0) {
      tris.push_back({bottom(i), bottom(i + 1), top(i)});
    } else {
      tris.push_back({bottom(i + 1), top(i + 1), top(i)});
    }
  }
  return Mesh::build_from_triangles(std::move(pts), tris);
}

}  // namespace

Mesh generate(const GenSpec& spec) {
  require(spec.scale > 0 && std::isfinite(spec.scale), "scale must be positive and finite");
  struct Visitor {
    double s;
    Mesh operator()(const GridSpec& g) const { return make_grid(g, s); }
    Mesh operator()(const RandomDelaunaySpec& d) const { return make_delaunay(d); }
    Mesh operator()(const FanSpec& f) const { return make_fan(f, s); }
    Mesh operator()(const ThinStripSpec& t) const { return make_strip(t, s); }
  };
  return std::visit(Visitor{spec.scale}, spec.kind);
}

}  // namespace zigzag
