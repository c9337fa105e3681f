#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <variant>

#include "zigzag/mesh.hpp"

namespace zigzag {

struct BBox {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 1.0;
  double y1 = 1.0;
};

/// nx * ny unit squares, each split along its rising diagonal.
struct GridSpec {
  std::size_t nx = 1;
  std::size_t ny = 1;
};

/// Delaunay triangulation of n uniform points in bbox.
struct RandomDelaunaySpec {
  std::size_t n_points = 3;
  std::uint64_t seed = 0;
  BBox bbox{};
};

/// n triangles sharing an apex at the origin, rim on the unit circle,
/// covering `span` radians. span == 2*pi closes the fan into a wheel.
struct FanSpec {
  std::size_t n = 3;
  double span = std::numbers::pi / 2;
};

/// Zig-zag strip of n triangles with unit base and height `aspect`.
struct ThinStripSpec {
  std::size_t n = 1;
  double aspect = 1.0;
};

struct GenSpec {
  std::variant<GridSpec, RandomDelaunaySpec, FanSpec, ThinStripSpec> kind;
  /// Uniform coordinate scale (ignored by RandomDelaunay, which uses bbox).
  double scale = 1.0;
};

/// Deterministic: equal specs give identical meshes. Throws Errc::SpecInvalid.
Mesh generate(const GenSpec& spec);

/// Incremental Bowyer-Watson with ghost triangles, O(n^2), exact predicates.
/// Duplicate points are dropped. Throws Errc::SpecInvalid when all points are
/// collinear.
Mesh delaunay_triangulation(std::span<const Point2> points);

/// Empty-circumcircle check on every interior edge (exact).
bool is_delaunay(const Mesh& m);

}  // namespace zigzag
