#include "flipcube/geom.hpp"

#include <algorithm>
#include <map>

namespace flipcube {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::CollinearCircle: return "CollinearCircle";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::CrossingInput: return "CrossingInput";
    case Errc::NotFlippable: return "NotFlippable";
    case Errc::AlreadyDelaunay: return "AlreadyDelaunay";
    case Errc::NotInTriangulation: return "NotInTriangulation";
    case Errc::PentagonExists: return "PentagonExists";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::Disconnected: return "Disconnected";
    case Errc::MismatchedPointSets: return "MismatchedPointSets";
    case Errc::NotADiagonal: return "NotADiagonal";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::MaskNotOnHull: return "MaskNotOnHull";
    case Errc::Io: return "Io";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i)
    points_[i].id = static_cast<int>(i);
  std::map<std::pair<Int, Int>, int> seen;
  for (const Point& p : points_) {
    auto [it, inserted] = seen.emplace(std::make_pair(p.x, p.y), p.id);
    if (!inserted)
      throw Error(Errc::DuplicatePoint,
                  "points " + std::to_string(it->second) + " and " +
                      std::to_string(p.id) + " coincide");
  }
}

PointSet PointSet::from_coords(const std::vector<std::pair<Int, Int>>& coords) {
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (const auto& [x, y] : coords) pts.push_back(Point{x, y, -1});
  return PointSet(std::move(pts));
}

bool PointSet::operator==(const PointSet& o) const {
  if (points_.size() != o.points_.size()) return false;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (!same_coords(points_[i], o.points_[i])) return false;
  return true;
}

static int sign_of(const Int& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  Int det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return static_cast<Orientation>(sign_of(det));
}

InCircleResult in_circle(const Point& a, const Point& b, const Point& c,
                         const Point& d) {
  Orientation o = orientation(a, b, c);
  if (o == Orientation::Collinear)
    throw Error(Errc::CollinearCircle, "circle-defining points are collinear");
  Int bx = b.x - a.x, by = b.y - a.y;
  Int cx = c.x - a.x, cy = c.y - a.y;
  Int dx = d.x - a.x, dy = d.y - a.y;
  Int bq = bx * bx + by * by;
  Int cq = cx * cx + cy * cy;
  Int dq = dx * dx + dy * dy;
  // Rows (b-a, c-a, d-a) of the lifted determinant; the cofactor of the
  // translated a-row flips the sign, so d is inside when det is negative
  // (for counterclockwise a, b, c).
  Int det = bx * (cy * dq - dy * cq) - by * (cx * dq - dx * cq) +
            bq * (cx * dy - dx * cy);
  int s = -sign_of(det) * static_cast<int>(o);
  return static_cast<InCircleResult>(s);
}

bool segments_cross(const Point& a, const Point& b, const Point& c,
                    const Point& d) {
  Orientation o1 = orientation(a, b, c);
  Orientation o2 = orientation(a, b, d);
  Orientation o3 = orientation(c, d, a);
  Orientation o4 = orientation(c, d, b);
  if (o1 == Orientation::Collinear || o2 == Orientation::Collinear ||
      o3 == Orientation::Collinear || o4 == Orientation::Collinear)
    return false;
  return o1 != o2 && o3 != o4;
}

bool on_closed_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != Orientation::Collinear) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool is_diagonal(const PointSet& ps, int a, int b) {
  const Point& pa = ps[a];
  const Point& pb = ps[b];
  for (const Point& p : ps.points()) {
    if (p.id == a || p.id == b) continue;
    if (on_closed_segment(pa, pb, p)) return false;
  }
  return true;
}

// Monotone chain over an arbitrary point list; strict turns only, so points
// interior to hull edges are dropped.  Returns indices into pts, ccw.
static std::vector<int> hull_indices(const std::vector<const Point*>& pts) {
  int n = static_cast<int>(pts.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (pts[i]->x != pts[j]->x) return pts[i]->x < pts[j]->x;
    return pts[i]->y < pts[j]->y;
  });
  if (n <= 2) return order;
  auto cw_or_line = [&](int i, int j, int k) {
    return orientation(*pts[i], *pts[j], *pts[k]) !=
           Orientation::CounterClockwise;
  };
  std::vector<int> hull;
  for (int idx : order) {
    while (hull.size() >= 2 &&
           cw_or_line(hull[hull.size() - 2], hull.back(), idx))
      hull.pop_back();
    hull.push_back(idx);
  }
  std::size_t lower = hull.size() + 1;
  for (int i = n - 2; i >= 0; --i) {
    int idx = order[i];
    while (hull.size() >= lower &&
           cw_or_line(hull[hull.size() - 2], hull.back(), idx))
      hull.pop_back();
    hull.push_back(idx);
  }
  hull.pop_back();
  return hull;
}

std::vector<int> convex_hull(const PointSet& ps) {
  std::vector<const Point*> pts;
  pts.reserve(ps.size());
  for (const Point& p : ps.points()) pts.push_back(&p);
  std::vector<int> idx = hull_indices(pts);
  std::vector<int> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(pts[i]->id);
  return out;
}

bool is_empty_kgon(const PointSet& ps, std::span<const int> ids) {
  std::size_t k = ids.size();
  if (k < 3) return false;
  std::vector<const Point*> pts;
  pts.reserve(k);
  std::vector<char> in_s(ps.size(), 0);
  for (int id : ids) {
    if (in_s[id]) return false;
    in_s[id] = 1;
    pts.push_back(&ps[id]);
  }
  std::vector<int> hull = hull_indices(pts);
  if (hull.size() != k) return false;  // some member is not a strict vertex
  // Closed-hull emptiness against the rest of P.
  for (const Point& p : ps.points()) {
    if (in_s[p.id]) continue;
    bool outside = false;
    for (std::size_t i = 0; i < k; ++i) {
      const Point& u = *pts[hull[i]];
      const Point& v = *pts[hull[(i + 1) % k]];
      if (orientation(u, v, p) == Orientation::Clockwise) {
        outside = true;
        break;
      }
    }
    if (!outside) return false;
  }
  return true;
}

bool all_collinear(const PointSet& ps) {
  int n = ps.size();
  if (n <= 2) return true;
  for (int i = 2; i < n; ++i)
    if (orientation(ps[0], ps[1], ps[i]) != Orientation::Collinear)
      return false;
  return true;
}

}  // namespace flipcube
