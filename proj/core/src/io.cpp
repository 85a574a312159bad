#include "flipcube/io.hpp"

#include <fstream>
#include <sstream>

namespace flipcube {

static bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

PointSet parse_points(std::istream& in) {
  std::vector<std::pair<Int, Int>> coords;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string xs, ys, extra;
    if (!(ls >> xs >> ys) || (ls >> extra))
      throw Error(Errc::Io, "line " + std::to_string(lineno) +
                                ": expected two integers");
    try {
      coords.emplace_back(Int(xs), Int(ys));
    } catch (const std::exception&) {
      throw Error(Errc::Io, "line " + std::to_string(lineno) +
                                ": malformed integer");
    }
  }
  return PointSet::from_coords(coords);
}

PointSet load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  return parse_points(in);
}

std::string format_points(const PointSet& ps) {
  std::ostringstream out;
  for (const Point& p : ps.points())
    out << p.x.str() << ' ' << p.y.str() << '\n';
  return out.str();
}

std::vector<Edge> parse_edges(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long i, j;
    std::string extra;
    if (!(ls >> i >> j) || (ls >> extra) || i < 0 || j < 0 || i == j)
      throw Error(Errc::Io, "line " + std::to_string(lineno) +
                                ": expected two distinct point ids");
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return edges;
}

std::vector<Edge> load_edges(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  return parse_edges(in);
}

std::string format_edges(const std::vector<Edge>& edges) {
  std::ostringstream out;
  for (const Edge& e : edges) out << e.a << ' ' << e.b << '\n';
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot open " + path + " for writing");
  out << content;
  if (!out) throw Error(Errc::Io, "write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace flipcube
