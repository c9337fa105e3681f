#include "zigzag/mesh_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace zigzag {

namespace {

using nlohmann::json;

double as_coordinate(const json& v, const char* what) {
  if (!v.is_number()) throw Error(Errc::Parse, std::string(what) + " must be a number");
  return v.get<double>();
}

std::size_t as_index(const json& v) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw Error(Errc::Parse, "triangle indices must be nonnegative integers");
  }
  return v.get<std::size_t>();
}

Mesh build_checked(std::vector<Point2> points, const std::vector<Triangle>& tris) {
  return Mesh::build_from_triangles(std::move(points), tris);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Mesh read_mesh_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("triangles")) {
    throw Error(Errc::Parse, "mesh JSON needs \"vertices\" and \"triangles\"");
  }
  const json& verts = doc.at("vertices");
  const json& tris = doc.at("triangles");
  if (!verts.is_array() || !tris.is_array()) throw Error(Errc::Parse, "vertices and triangles must be arrays");

  std::vector<Point2> points;
  points.reserve(verts.size());
  for (const json& v : verts) {
    if (!v.is_array() || v.size() != 2) throw Error(Errc::Parse, "each vertex must be [x, y]");
    points.emplace_back(as_coordinate(v[0], "x"), as_coordinate(v[1], "y"));
  }
  std::vector<Triangle> triangles;
  triangles.reserve(tris.size());
  for (const json& t : tris) {
    if (!t.is_array() || t.size() != 3) throw Error(Errc::Parse, "each triangle must be [i, j, k]");
    triangles.push_back({as_index(t[0]), as_index(t[1]), as_index(t[2])});
  }
  return build_checked(std::move(points), triangles);
}

void write_mesh_json(const Mesh& m, std::ostream& out) {
  out << "{\"vertices\": [";
  const auto points = m.points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << (i ? ",\n  " : "\n  ") << '[' << format_double(points[i].x()) << ", "
        << format_double(points[i].y()) << ']';
  }
  out << "\n],\n\"triangles\": [";
  const auto tris = m.triangles();
  for (std::size_t i = 0; i < tris.size(); ++i) {
    out << (i ? ",\n  " : "\n  ") << '[' << tris[i][0] << ", " << tris[i][1] << ", " << tris[i][2] << ']';
  }
  out << "\n]}\n";
}

Mesh read_off(std::istream& in) {
  // Strip comments, then read whitespace-separated tokens.
  std::ostringstream clean;
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    clean << line << '\n';
  }
  std::istringstream tokens(clean.str());
  std::string tok;
  const auto next_token = [&]() -> std::string {
    if (!(tokens >> tok)) throw Error(Errc::Parse, "unexpected end of OFF input");
    return tok;
  };
  const auto next_number = [&]() {
    const std::string s = next_token();
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw Error(Errc::Parse, "bad OFF number '" + s + "'");
    }
    return v;
  };
  const auto next_count = [&]() {
    const std::string s = next_token();
    std::size_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw Error(Errc::Parse, "bad OFF integer '" + s + "'");
    }
    return v;
  };

  if (next_token() != "OFF") throw Error(Errc::Parse, "missing OFF header");
  const std::size_t nv = next_count();
  const std::size_t nf = next_count();
  next_count();  // edge count, unused

  std::vector<Point2> points;
  points.reserve(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    const double x = next_number();
    const double y = next_number();
    const double z = next_number();
    if (z != 0.0) throw Error(Errc::Parse, "OFF vertex " + std::to_string(i) + " has nonzero z");
    points.emplace_back(x, y);
  }
  std::vector<Triangle> triangles;
  triangles.reserve(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    if (next_count() != 3) throw Error(Errc::Parse, "OFF face " + std::to_string(f) + " is not a triangle");
    triangles.push_back({next_count(), next_count(), next_count()});
  }
  return build_checked(std::move(points), triangles);
}

Mesh load_mesh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path.string());
  if (path.extension() == ".off" || path.extension() == ".OFF") return read_off(in);
  return read_mesh_json(in);
}

void save_mesh_json(const Mesh& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Parse, "cannot write " + path.string());
  write_mesh_json(m, out);
}

}  // namespace zigzag
