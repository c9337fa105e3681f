#pragma once

#include <iosfwd>

#include "zigzag/mesh.hpp"
#include "zigzag/trace_io.hpp"

namespace zigzag::cli {

/// SVG 1.1 drawing of the mesh with the walk's faces shaded in visiting
/// order and the target marked. Throws Errc::IndexOutOfRange if the trace
/// names half-edges the mesh does not have, and Errc::Parse if consecutive
/// trace edges are not successor-linked.
void render_svg(const Mesh& m, const TraceDocument& doc, std::ostream& out);

}  // namespace zigzag::cli
