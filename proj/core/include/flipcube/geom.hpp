#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "flipcube/error.hpp"

namespace flipcube {

// Exact integer coordinate type.  All predicates are computed as exact
// big-integer determinants; there is no floating point anywhere in the
// geometric kernel.
using Int = boost::multiprecision::cpp_int;

struct Point {
  Int x;
  Int y;
  int id = -1;
};

inline bool same_coords(const Point& a, const Point& b) {
  return a.x == b.x && a.y == b.y;
}

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };
enum class InCircleResult { Outside = -1, Cocircular = 0, Inside = 1 };

/// An unordered pair of point ids, stored with a < b.
struct Edge {
  int a;
  int b;

  Edge() : a(-1), b(-1) {}
  Edge(int i, int j) : a(i < j ? i : j), b(i < j ? j : i) {}

  bool contains(int id) const { return a == id || b == id; }
  int other(int id) const { return a == id ? b : a; }

  auto operator<=>(const Edge&) const = default;
};

/// Immutable ordered set of distinct points.  Point ids are indices into the
/// set.  Duplicate coordinates are rejected at construction.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);
  static PointSet from_coords(const std::vector<std::pair<Int, Int>>& coords);

  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](int id) const { return points_[id]; }
  int size() const { return static_cast<int>(points_.size()); }

  bool operator==(const PointSet& o) const;

 private:
  std::vector<Point> points_;
};

/// Sign of det(b - a, c - a).
Orientation orientation(const Point& a, const Point& b, const Point& c);

/// Position of d relative to the circumcircle of (a, b, c), normalized so the
/// result does not depend on the orientation of the defining triple.
/// Throws Errc::CollinearCircle if a, b, c are collinear.
InCircleResult in_circle(const Point& a, const Point& b, const Point& c,
                         const Point& d);

/// True iff open segments ab and cd cross properly (one interior point of
/// both).  Shared endpoints, touching, and collinear overlap all yield false.
bool segments_cross(const Point& a, const Point& b, const Point& c,
                    const Point& d);

/// True iff p lies on the closed segment ab.
bool on_closed_segment(const Point& a, const Point& b, const Point& p);

/// True iff no point of P other than a, b lies on the closed segment ab.
bool is_diagonal(const PointSet& ps, int a, int b);

/// True iff the points of S are in strictly convex position and the closed
/// hull of S contains no point of P outside S.
bool is_empty_kgon(const PointSet& ps, std::span<const int> ids);

/// Hull vertex ids in counterclockwise order.  Points interior to hull edges
/// are not vertices.  Collinear input yields the two extreme points; one or
/// two points are returned as-is.
std::vector<int> convex_hull(const PointSet& ps);

/// True iff all points of P lie on one line (also true for |P| <= 2).
bool all_collinear(const PointSet& ps);

}  // namespace flipcube
