#include "flipcube/generators.hpp"

#include <cmath>
#include <random>

#include "flipcube/quadgraph.hpp"

namespace flipcube {

const char* family_name(Family f) {
  switch (f) {
    case Family::Lattice: return "lattice";
    case Family::TwoLines: return "two_lines";
    case Family::ThreeRays: return "three_rays";
    case Family::TwoWedges: return "two_wedges";
    case Family::WedgeSegment: return "wedge_segment";
    case Family::QuadSegment: return "quad_segment";
    case Family::LatticeHullRemoved: return "lattice_hull_removed";
    case Family::KaraRows: return "kara_rows";
    case Family::ConvexNgon: return "convex_ngon";
    case Family::RandomGeneralPosition: return "random";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  for (Family f :
       {Family::Lattice, Family::TwoLines, Family::ThreeRays,
        Family::TwoWedges, Family::WedgeSegment, Family::QuadSegment,
        Family::LatticeHullRemoved, Family::KaraRows, Family::ConvexNgon,
        Family::RandomGeneralPosition})
    if (name == family_name(f)) return f;
  throw Error(Errc::InvalidParams, "unknown family: " + name);
}

namespace {

PointSet make(std::vector<std::pair<long long, long long>> coords) {
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (auto& [x, y] : coords) pts.push_back(Point{Int(x), Int(y)});
  return PointSet(std::move(pts));
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::InvalidParams, what);
}

}  // namespace

PointSet lattice(int w, int h) {
  require(w >= 1 && h >= 1, "lattice needs w >= 1 and h >= 1");
  std::vector<std::pair<long long, long long>> pts;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) pts.emplace_back(x, y);
  return make(std::move(pts));
}

PointSet two_lines(int k, int m) {
  require(k >= 1 && m >= 1, "two_lines needs k >= 1 and m >= 1");
  std::vector<std::pair<long long, long long>> pts;
  for (int i = 0; i < k; ++i) pts.emplace_back(i, 0);
  for (int i = 0; i < m; ++i) pts.emplace_back(i, 1);
  return make(std::move(pts));
}

PointSet three_rays(int a, int b, int c) {
  require(a >= 0 && b >= 0 && c >= 0, "three_rays needs nonnegative counts");
  // Rays from a shared apex in directions (1,0), (0,1), (-1,-1); the three
  // wedges between them all have angle below pi.
  std::vector<std::pair<long long, long long>> pts;
  pts.emplace_back(0, 0);
  for (int i = 1; i <= a; ++i) pts.emplace_back(i, 0);
  for (int i = 1; i <= b; ++i) pts.emplace_back(0, i);
  for (int i = 1; i <= c; ++i) pts.emplace_back(-i, -i);
  return make(std::move(pts));
}

PointSet two_wedges(int a, int b) {
  require(a >= 0 && b >= 0, "two_wedges needs nonnegative counts");
  // Wedge apexes face away from each other: each apex lies in the
  // complementary wedge of the other, as required for pentagon-freeness.
  std::vector<std::pair<long long, long long>> pts;
  pts.emplace_back(0, 0);  // opens left
  for (int i = 1; i <= a; ++i) {
    pts.emplace_back(-i, i);
    pts.emplace_back(-i, -i);
  }
  pts.emplace_back(10, 0);  // opens right
  for (int i = 1; i <= b; ++i) {
    pts.emplace_back(10 + i, i);
    pts.emplace_back(10 + i, -i);
  }
  return make(std::move(pts));
}

PointSet wedge_segment(int a, int b) {
  require(a >= 0 && b >= 0, "wedge_segment needs nonnegative counts");
  // Wedge boundary opening right from the origin; the segment sits in the
  // complementary wedge on a vertical line disjoint from the wedge.
  std::vector<std::pair<long long, long long>> pts;
  pts.emplace_back(0, 0);
  for (int i = 1; i <= a; ++i) {
    pts.emplace_back(i, i);
    pts.emplace_back(i, -i);
  }
  for (int j = 0; j < b; ++j)
    pts.emplace_back(-(b + 1), 2 * j - (b - 1));
  return make(std::move(pts));
}

PointSet quad_segment(int b) {
  require(b >= 0, "quad_segment needs a nonnegative count");
  long long s = b + 1;
  std::vector<std::pair<long long, long long>> pts = {
      {0, 0}, {2 * s, 0}, {2 * s, 2 * s}, {0, 2 * s}};
  for (int j = 1; j <= b; ++j) pts.emplace_back(2 * j, s);
  return make(std::move(pts));
}

PointSet lattice_hull_removed(int w, int h, std::uint64_t mask) {
  require(w >= 1 && h >= 1, "lattice needs w >= 1 and h >= 1");
  require(static_cast<long long>(w) * h <= 64,
          "removal mask supports at most 64 points");
  std::vector<std::pair<long long, long long>> pts;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      int idx = y * w + x;
      bool boundary = x == 0 || x == w - 1 || y == 0 || y == h - 1;
      if (mask >> idx & 1) {
        if (!boundary)
          throw Error(Errc::MaskNotOnHull,
                      "masked point is not on the hull boundary");
        continue;
      }
      pts.emplace_back(x, y);
    }
  return make(std::move(pts));
}

PointSet kara_rows(int m) {
  require(m >= 0, "kara_rows needs m >= 0");
  std::vector<std::pair<long long, long long>> pts;
  for (int i = 0; i <= m; ++i) pts.emplace_back(12LL * i, 6);
  for (int i = 0; i <= m; ++i) pts.emplace_back(3LL * i, 3);
  for (int i = 0; i <= m; ++i) pts.emplace_back(4LL * i, 2);
  for (int i = 0; i <= m; ++i) pts.emplace_back(6LL * i, 0);
  return make(std::move(pts));
}

PointSet convex_ngon(int n) {
  require(n >= 3, "convex_ngon needs n >= 3");
  for (double r = 3.0 * n;; r *= 2) {
    std::vector<std::pair<long long, long long>> pts;
    for (int k = 0; k < n; ++k) {
      double t = 2.0 * M_PI * k / n;
      pts.emplace_back(std::llround(r * std::cos(t)),
                       std::llround(r * std::sin(t)));
    }
    PointSet ps;
    try {
      ps = make(std::move(pts));
    } catch (const Error&) {
      continue;  // rounding collision, grow the radius
    }
    bool strict = true;
    for (int k = 0; k < n && strict; ++k)
      strict = orientation(ps[k], ps[(k + 1) % n], ps[(k + 2) % n]) ==
               Orientation::CounterClockwise;
    if (strict) return ps;
  }
}

PointSet random_general_position(int n, std::uint64_t seed) {
  require(n >= 0, "random point count must be nonnegative");
  std::mt19937_64 rng(seed);
  const long long range = 1000000;
  auto draw = [&] { return static_cast<long long>(rng() % (range + 1)); };
  std::vector<Point> pts;
  long long attempts = 0;
  while (static_cast<int>(pts.size()) < n) {
    if (++attempts > 10000LL * (n + 1))
      throw Error(Errc::Internal, "rejection sampling failed to converge");
    Point cand{Int(draw()), Int(draw()), static_cast<int>(pts.size())};
    bool ok = true;
    for (const Point& p : pts)
      if (same_coords(p, cand)) ok = false;
    for (size_t i = 0; ok && i < pts.size(); ++i)
      for (size_t j = i + 1; ok && j < pts.size(); ++j)
        if (orientation(pts[i], pts[j], cand) == Orientation::Collinear)
          ok = false;
    for (size_t i = 0; ok && i < pts.size(); ++i)
      for (size_t j = i + 1; ok && j < pts.size(); ++j)
        for (size_t k = j + 1; ok && k < pts.size(); ++k)
          if (in_circle(pts[i], pts[j], pts[k], cand) ==
              InCircleResult::Cocircular)
            ok = false;
    if (ok) pts.push_back(std::move(cand));
  }
  return PointSet(std::move(pts));
}

PointSet dilation_free_six() {
  // Verified quadrilateral-free (hence pentagon-free) by exhaustive scan in
  // the test suite; not of the collinear-family types.
  return make({{0, 0}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {2, 3}});
}

PointSet clip_to_convex(const PointSet& ps,
                        const std::vector<std::pair<Int, Int>>& polygon) {
  if (polygon.size() < 3)
    throw Error(Errc::InvalidParams, "window needs at least 3 vertices");
  std::vector<Point> poly;
  for (const auto& [x, y] : polygon) poly.push_back(Point{x, y});
  std::vector<Point> kept;
  for (const Point& p : ps.points()) {
    bool inside = true;
    for (size_t i = 0; i < poly.size() && inside; ++i)
      inside = orientation(poly[i], poly[(i + 1) % poly.size()], p) !=
               Orientation::Clockwise;
    if (inside) kept.push_back(p);
  }
  for (size_t i = 0; i < kept.size(); ++i) kept[i].id = static_cast<int>(i);
  return PointSet(std::move(kept));
}

namespace {

long long param(const FamilySpec& spec, size_t i) { return spec.params[i]; }

void expect_params(const FamilySpec& spec, size_t n) {
  if (spec.params.size() != n)
    throw Error(Errc::InvalidParams,
                std::string(family_name(spec.family)) + " takes " +
                    std::to_string(n) + " parameter(s)");
}

}  // namespace

PointSet generate(const FamilySpec& spec) {
  PointSet ps;
  bool pentagon_free = true;
  switch (spec.family) {
    case Family::Lattice:
      expect_params(spec, 2);
      ps = lattice(static_cast<int>(param(spec, 0)),
                   static_cast<int>(param(spec, 1)));
      break;
    case Family::TwoLines:
      expect_params(spec, 2);
      ps = two_lines(static_cast<int>(param(spec, 0)),
                     static_cast<int>(param(spec, 1)));
      break;
    case Family::ThreeRays:
      expect_params(spec, 3);
      ps = three_rays(static_cast<int>(param(spec, 0)),
                      static_cast<int>(param(spec, 1)),
                      static_cast<int>(param(spec, 2)));
      break;
    case Family::TwoWedges:
      expect_params(spec, 2);
      ps = two_wedges(static_cast<int>(param(spec, 0)),
                      static_cast<int>(param(spec, 1)));
      break;
    case Family::WedgeSegment:
      expect_params(spec, 2);
      ps = wedge_segment(static_cast<int>(param(spec, 0)),
                         static_cast<int>(param(spec, 1)));
      break;
    case Family::QuadSegment:
      expect_params(spec, 1);
      ps = quad_segment(static_cast<int>(param(spec, 0)));
      break;
    case Family::LatticeHullRemoved:
      expect_params(spec, 3);
      ps = lattice_hull_removed(static_cast<int>(param(spec, 0)),
                                static_cast<int>(param(spec, 1)),
                                static_cast<std::uint64_t>(param(spec, 2)));
      break;
    case Family::KaraRows:
      expect_params(spec, 1);
      ps = kara_rows(static_cast<int>(param(spec, 0)));
      break;
    case Family::ConvexNgon:
      expect_params(spec, 1);
      ps = convex_ngon(static_cast<int>(param(spec, 0)));
      pentagon_free = false;
      break;
    case Family::RandomGeneralPosition:
      expect_params(spec, 1);
      ps = random_general_position(static_cast<int>(param(spec, 0)),
                                   spec.seed);
      pentagon_free = false;
      break;
  }
  if (pentagon_free && find_empty_pentagon(ps))
    throw Error(Errc::Internal,
                std::string(family_name(spec.family)) +
                    " generated a set with an empty pentagon");
  return ps;
}

}  // namespace flipcube
