#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

namespace zigzag::cli {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

void check_edge(const Mesh& m, HalfEdgeId e) {
  if (to_index(e) >= m.num_halfedges()) {
    throw Error(Errc::IndexOutOfRange, "trace refers to halfedge " + std::to_string(to_index(e)) +
                                           " but the mesh has " + std::to_string(m.num_halfedges()));
  }
}

void check_trace(const Mesh& m, const TraceDocument& doc) {
  const auto& steps = doc.trace.steps;
  check_edge(m, doc.trace.start);
  for (const WalkStep& s : steps) check_edge(m, s.edge);
  if (!steps.empty() && steps[0].edge != doc.trace.start && steps[0].edge != m.inv(doc.trace.start)) {
    throw Error(Errc::Parse, "first trace edge is neither the start edge nor its twin");
  }
  for (std::size_t k = 1; k < steps.size(); ++k) {
    const HalfEdgeId prev = steps[k - 1].edge;
    if (m.is_boundary(prev)) throw Error(Errc::Parse, "trace continues past a boundary edge");
    const Successors s = successors(m, prev);
    const HalfEdgeId want = steps[k].choice == StepChoice::Left ? s.left : s.right;
    if (steps[k].choice == StepChoice::Bootstrap || steps[k].edge != want) {
      throw Error(Errc::Parse, "trace step " + std::to_string(k) + " is not a successor of the previous edge");
    }
  }
}

}  // namespace

void render_svg(const Mesh& m, const TraceDocument& doc, std::ostream& out) {
  check_trace(m, doc);

  const Point2& p = doc.trace.target;
  double x0 = p.x(), x1 = p.x(), y0 = p.y(), y1 = p.y();
  for (const Point2& q : m.points()) {
    x0 = std::min(x0, q.x());
    x1 = std::max(x1, q.x());
    y0 = std::min(y0, q.y());
    y1 = std::max(y1, q.y());
  }
  const double extent = std::max({x1 - x0, y1 - y0, 1e-300});
  const double s = (kCanvas - 2 * kMargin) / extent;
  const double width = (x1 - x0) * s + 2 * kMargin;
  const double height = (y1 - y0) * s + 2 * kMargin;
  const auto X = [&](double x) { return fmt(kMargin + (x - x0) * s); };
  const auto Y = [&](double y) { return fmt(kMargin + (y1 - y) * s); };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Visited faces, later ones darker.
  out << "<g id=\"visited\" stroke=\"none\">\n";
  const auto& steps = doc.trace.steps;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const FaceId f = m.face(steps[k].edge);
    if (f == kOuterFace) continue;
    const auto pts = m.face_points(f);
    const double t = steps.size() == 1 ? 1.0 : static_cast<double>(k) / static_cast<double>(steps.size() - 1);
    const int shade = 235 - static_cast<int>(t * 120.0);
    out << "<polygon data-step=\"" << k << "\" fill=\"rgb(" << shade << ',' << shade << ",255)\" points=\"";
    for (int i = 0; i < 3; ++i) out << (i ? " " : "") << X(pts[i].x()) << ',' << Y(pts[i].y());
    out << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"mesh\" stroke=\"black\" stroke-width=\"0.75\">\n";
  for (std::size_t h = 0; h < m.num_halfedges(); ++h) {
    const HalfEdgeId e = halfedge_id(h);
    if (to_index(m.inv(e)) < h) continue;
    const Point2& a = m.point(m.origin(e));
    const Point2& b = m.point(m.destination(e));
    out << "<line x1=\"" << X(a.x()) << "\" y1=\"" << Y(a.y()) << "\" x2=\"" << X(b.x()) << "\" y2=\""
        << Y(b.y()) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"walk\" stroke=\"rgb(200,30,30)\" stroke-width=\"2\">\n";
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Point2& a = m.point(m.origin(steps[k].edge));
    const Point2& b = m.point(m.destination(steps[k].edge));
    out << "<line data-step=\"" << k << "\" x1=\"" << X(a.x()) << "\" y1=\"" << Y(a.y()) << "\" x2=\""
        << X(b.x()) << "\" y2=\"" << Y(b.y()) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<circle id=\"target\" cx=\"" << X(p.x()) << "\" cy=\"" << Y(p.y())
      << "\" r=\"4\" fill=\"rgb(200,30,30)\"/>\n"
      << "</svg>\n";
}

}  // namespace zigzag::cli
