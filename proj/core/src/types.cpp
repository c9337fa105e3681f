#include "zigzag/types.hpp"

namespace zigzag {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonFinite: return "NonFinite";
    case Errc::DegenerateSegment: return "DegenerateSegment";
    case Errc::PointOnEdge: return "PointOnEdge";
    case Errc::DegenerateTriangle: return "DegenerateTriangle";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NonManifold: return "NonManifold";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::DegenerateFace: return "DegenerateFace";
    case Errc::InconsistentOrientation: return "InconsistentOrientation";
    case Errc::OuterFace: return "OuterFace";
    case Errc::BoundaryStart: return "BoundaryStart";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::SpecInvalid: return "SpecInvalid";
    case Errc::PointOnFace: return "PointOnFace";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace zigzag
