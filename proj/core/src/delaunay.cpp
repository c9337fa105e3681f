#include <algorithm>
#include <array>
#include <unordered_set>

#include "zigzag/meshgen.hpp"

namespace zigzag {

namespace {

// Ghost vertex: triangle (v, u, kGhost) sits outside hull edge u->v.
constexpr std::size_t kGhost = static_cast<std::size_t>(-1);

using Tri = std::array<std::size_t, 3>;

std::uint64_t key(std::size_t a, std::size_t b) {
  const std::uint64_t ga = a == kGhost ? 0xffffffffULL : a;
  const std::uint64_t gb = b == kGhost ? 0xffffffffULL : b;
  return (ga << 32) | gb;
}

Tri normalize(Tri t) {
  // Keep the ghost last so conflict tests can dispatch on t[2].
  while (t[0] == kGhost || t[1] == kGhost) std::rotate(t.begin(), t.begin() + 1, t.end());
  return t;
}

class BowyerWatson {
 public:
  explicit BowyerWatson(std::span<const Point2> pts) : pts_(pts) {}

  bool conflicts(const Tri& t, const Point2& p) const {
    if (t[2] != kGhost) return incircle(pts_[t[0]], pts_[t[1]], pts_[t[2]], p) > 0;
    const Point2& v = pts_[t[0]];
    const Point2& u = pts_[t[1]];
    const int o = orientation(v, u, p);
    if (o > 0) return true;
    // On the hull line: conflict only strictly inside the hull edge.
    return o == 0 && on_segment(Segment2(u, v), p) && !(p == u) && !(p == v);
  }

  void seed(std::size_t a, std::size_t b, std::size_t c) {
    if (orientation(pts_[a], pts_[b], pts_[c]) < 0) std::swap(b, c);
    tris_.push_back({a, b, c});
    tris_.push_back({b, a, kGhost});
    tris_.push_back({c, b, kGhost});
    tris_.push_back({a, c, kGhost});
  }

  void insert(std::size_t pi) {
    const Point2& p = pts_[pi];
    std::vector<Tri> keep;
    std::vector<Tri> cavity;
    keep.reserve(tris_.size() + 4);
    for (const Tri& t : tris_) (conflicts(t, p) ? cavity : keep).push_back(t);

    std::unordered_set<std::uint64_t> edges;
    for (const Tri& t : cavity) {
      for (int i = 0; i < 3; ++i) edges.insert(key(t[i], t[(i + 1) % 3]));
    }
    for (const Tri& t : cavity) {
      for (int i = 0; i < 3; ++i) {
        const std::size_t x = t[i];
        const std::size_t y = t[(i + 1) % 3];
        if (edges.contains(key(y, x))) continue;
        keep.push_back(normalize({x, y, pi}));
      }
    }
    tris_ = std::move(keep);
  }

  std::vector<Triangle> real_triangles() const {
    std::vector<Triangle> out;
    for (const Tri& t : tris_) {
      if (t[2] != kGhost) out.push_back(t);
    }
    return out;
  }

 private:
  std::span<const Point2> pts_;
  std::vector<Tri> tris_;
};

}  // namespace

Mesh delaunay_triangulation(std::span<const Point2> input) {
  // Drop exact duplicates, keeping first occurrences in input order.
  std::vector<Point2> pts;
  {
    std::vector<std::size_t> order(input.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return input[i].x() < input[j].x() || (input[i].x() == input[j].x() && input[i].y() < input[j].y());
    });
    std::vector<bool> dup(input.size(), false);
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (input[order[k]] == input[order[k - 1]]) dup[order[k]] = true;
    }
    for (std::size_t i = 0; i < input.size(); ++i) {
      if (!dup[i]) pts.push_back(input[i]);
    }
  }
  if (pts.size() < 3) throw Error(Errc::SpecInvalid, "need at least three distinct points");

  std::size_t third = 2;
  while (third < pts.size() && orientation(pts[0], pts[1], pts[third]) == 0) ++third;
  if (third == pts.size()) throw Error(Errc::SpecInvalid, "all points are collinear");

  BowyerWatson bw(pts);
  bw.seed(0, 1, third);
  for (std::size_t i = 2; i < pts.size(); ++i) {
    if (i != third) bw.insert(i);
  }
  const auto tris = bw.real_triangles();
  return Mesh::build_from_triangles(std::move(pts), tris);
}

bool is_delaunay(const Mesh& m) {
  for (std::size_t h = 0; h < m.num_halfedges(); ++h) {
    const HalfEdgeId e = halfedge_id(h);
    const HalfEdgeId t = m.inv(e);
    if (m.is_boundary(e) || m.is_boundary(t) || to_index(t) < h) continue;
    const auto tri = m.face_points(m.face(e));
    const Point2& opposite = m.point(m.origin(m.prev(t)));
    if (incircle(tri[0], tri[1], tri[2], opposite) > 0) return false;
  }
  return true;
}

}  // namespace zigzag
