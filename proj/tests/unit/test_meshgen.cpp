#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

#include "test_support.hpp"
#include "zigzag/mesh_io.hpp"
#include "zigzag/meshgen.hpp"

using namespace zigzag;

namespace {

std::string json_of(const Mesh& m) {
  std::ostringstream out;
  write_mesh_json(m, out);
  return out.str();
}

Errc spec_error(const GenSpec& s) {
  try {
    generate(s);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Parse;
}

bool all_faces_ccw(const Mesh& m) {
  for (std::size_t f = 0; f < m.num_faces(); ++f) {
    const auto t = m.face_points(face_id(f));
    if (orientation(t[0], t[1], t[2]) <= 0) return false;
  }
  return true;
}

}  // namespace

TEST(Grid, TwoByTwoCounts) {
  const Mesh m = generate({GridSpec{2, 2}});
  EXPECT_EQ(m.num_vertices(), 9u);
  EXPECT_EQ(m.num_faces(), 8u);
  EXPECT_EQ(m.num_edges(), 16u);
  EXPECT_EQ(9 - 16 + 8, 1);
  EXPECT_TRUE(validate(m).empty());
}

TEST(Grid, ScaleAndShape) {
  const Mesh m = generate({GridSpec{3, 2}, 0.5});
  EXPECT_EQ(m.num_faces(), 12u);
  EXPECT_EQ(m.points().back(), Point2(1.5, 1.0));
}

TEST(Delaunay, DeterministicAndEmptyCircle) {
  const GenSpec s{RandomDelaunaySpec{100, 7, {}}};
  const Mesh a = generate(s);
  const Mesh b = generate(s);
  EXPECT_EQ(json_of(a), json_of(b));
  EXPECT_TRUE(validate(a).empty());
  EXPECT_TRUE(is_delaunay(a));
  EXPECT_NE(json_of(a), json_of(generate({RandomDelaunaySpec{100, 8, {}}})));
}

TEST(Delaunay, EmptyCircleOnSeveralSeeds) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Mesh m = generate({RandomDelaunaySpec{200, seed, {-3, -1, 5, 2}}});
    EXPECT_EQ(m.num_vertices(), 200u);
    EXPECT_TRUE(validate(m).empty());
    EXPECT_TRUE(is_delaunay(m));
  }
}

TEST(Delaunay, IndependentEmptyCircleScan) {
  // Every vertex against every face, not only across edges.
  const Mesh m = generate({RandomDelaunaySpec{60, 21, {}}});
  for (std::size_t f = 0; f < m.num_faces(); ++f) {
    const auto t = m.face_points(face_id(f));
    for (const Point2& q : m.points()) ASSERT_LE(incircle(t[0], t[1], t[2], q), 0);
  }
}

TEST(Delaunay, CocircularLatticeAndDuplicates) {
  std::vector<Point2> pts;
  for (int j = 0; j < 6; ++j) {
    for (int i = 0; i < 6; ++i) pts.emplace_back(i, j);
  }
  pts.emplace_back(2, 2);
  pts.emplace_back(0, 0);
  const Mesh m = delaunay_triangulation(pts);
  EXPECT_EQ(m.num_vertices(), 36u);
  EXPECT_EQ(m.num_faces(), 50u);
  EXPECT_TRUE(validate(m).empty());
  EXPECT_TRUE(is_delaunay(m));
  const Mesh again = delaunay_triangulation(pts);
  EXPECT_EQ(json_of(m), json_of(again));
}

TEST(Delaunay, CollinearInputsAreRejected) {
  const std::vector<Point2> pts{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  EXPECT_THROW(delaunay_triangulation(pts), Error);
  const std::vector<Point2> mixed{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1, 1}};
  const Mesh m = delaunay_triangulation(mixed);
  EXPECT_EQ(m.num_faces(), 3u);
  EXPECT_TRUE(validate(m).empty());
}

TEST(Fan, ThinAndClosed) {
  const Mesh thin = generate({FanSpec{50, 0.05}});
  EXPECT_EQ(thin.num_faces(), 50u);
  EXPECT_EQ(thin.num_vertices(), 52u);
  EXPECT_TRUE(validate(thin).empty());
  EXPECT_TRUE(all_faces_ccw(thin));

  const Mesh wheel = generate({FanSpec{16, 2 * std::numbers::pi}});
  EXPECT_EQ(wheel.num_faces(), 16u);
  EXPECT_EQ(wheel.num_vertices(), 17u);
  EXPECT_TRUE(validate(wheel).empty());
  std::size_t boundary = 0;
  for (std::size_t h = 0; h < wheel.num_halfedges(); ++h) boundary += wheel.is_boundary(halfedge_id(h)) ? 1 : 0;
  EXPECT_EQ(boundary, 16u);
}

TEST(Strip, HighAspect) {
  const Mesh m = generate({ThinStripSpec{10, 100}});
  EXPECT_EQ(m.num_faces(), 10u);
  EXPECT_TRUE(validate(m).empty());
  EXPECT_TRUE(all_faces_ccw(m));
  const Mesh odd = generate({ThinStripSpec{7, 1000}});
  EXPECT_EQ(odd.num_faces(), 7u);
  EXPECT_TRUE(validate(odd).empty());
}

TEST(GenSpec, InvalidParameters) {
  EXPECT_EQ(spec_error({GridSpec{0, 3}}), Errc::SpecInvalid);
  EXPECT_EQ(spec_error({RandomDelaunaySpec{2, 0, {}}}), Errc::SpecInvalid);
  EXPECT_EQ(spec_error({RandomDelaunaySpec{10, 0, {1, 0, 0, 1}}}), Errc::SpecInvalid);
  EXPECT_EQ(spec_error({FanSpec{4, 0}}), Errc::SpecInvalid);
  EXPECT_EQ(spec_error({FanSpec{4, 7}}), Errc::SpecInvalid);
  EXPECT_EQ(spec_error({FanSpec{1, 3.5}}), Errc::SpecInvalid);
  EXPECT_EQ(spec_error({ThinStripSpec{0, 1}}), Errc::SpecInvalid);
  EXPECT_EQ(spec_error({ThinStripSpec{3, -1}}), Errc::SpecInvalid);
  EXPECT_EQ(spec_error({GridSpec{2, 2}, 0}), Errc::SpecInvalid);
}

TEST(SplitMix64, KnownSequenceAndRange) {
  // Reference values of SplitMix64 seeded with 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng(), 0x6e789e6aa1b965f4ULL);
  SplitMix64 u(123);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
  }
}
