#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flipcube/geom.hpp"

namespace flipcube {

// Point-set text format: one point per line, two whitespace-separated decimal
// integers; '#'-prefixed lines are comments.  Point id = zero-based order
// among non-comment lines.
PointSet parse_points(std::istream& in);
PointSet load_points(const std::string& path);
std::string format_points(const PointSet& ps);

// Triangulation text format: one edge per line, "i j" with i < j.
std::vector<Edge> parse_edges(std::istream& in);
std::vector<Edge> load_edges(const std::string& path);
std::string format_edges(const std::vector<Edge>& edges);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace flipcube
