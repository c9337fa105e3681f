#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "zigzag/mesh.hpp"

namespace zigzag {

// Mesh JSON: {"vertices": [[x, y], ...], "triangles": [[i, j, k], ...]}.
// Parse failures throw Errc::Parse; geometric problems surface from
// Mesh::build_from_triangles with their own codes.

Mesh read_mesh_json(std::istream& in);
void write_mesh_json(const Mesh& m, std::ostream& out);

/// OFF import. Faces must be triangles and every z coordinate must be 0.
Mesh read_off(std::istream& in);

/// Dispatches on extension: ".off" reads OFF, anything else mesh JSON.
Mesh load_mesh(const std::filesystem::path& path);
void save_mesh_json(const Mesh& m, const std::filesystem::path& path);

/// Shortest decimal string that round-trips the double.
std::string format_double(double v);

}  // namespace zigzag
