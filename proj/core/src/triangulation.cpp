#include "flipcube/triangulation.hpp"

#include <algorithm>
#include <set>

namespace flipcube {

Triangulation::Triangulation(const PointSet& ps, std::vector<Edge> edges,
                             bool validate)
    : ps_(&ps), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  build_adjacency();
  if (validate) this->validate();
}

void Triangulation::build_adjacency() {
  adj_.assign(ps_->size(), {});
  for (const Edge& e : edges_) {
    adj_[e.a].push_back(e.b);
    adj_[e.b].push_back(e.a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Triangulation::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

static bool crosses_any(const PointSet& ps, Edge e,
                        const std::vector<Edge>& edges) {
  for (const Edge& f : edges)
    if (segments_cross(ps[e.a], ps[e.b], ps[f.a], ps[f.b])) return true;
  return false;
}

void Triangulation::validate() const {
  const PointSet& ps = *ps_;
  for (const Edge& e : edges_) {
    if (e.a < 0 || e.b >= ps.size())
      throw Error(Errc::CrossingInput, "edge id out of range");
    if (!is_diagonal(ps, e.a, e.b))
      throw Error(Errc::CrossingInput,
                  "edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                      " is not a diagonal");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j)
      if (segments_cross(ps[edges_[i].a], ps[edges_[i].b], ps[edges_[j].a],
                         ps[edges_[j].b]))
        throw Error(Errc::CrossingInput, "edge set contains a crossing pair");
  // Maximality: every absent diagonal must cross some present edge.
  for (int i = 0; i < ps.size(); ++i)
    for (int j = i + 1; j < ps.size(); ++j) {
      Edge e(i, j);
      if (contains(e) || !is_diagonal(ps, i, j)) continue;
      if (!crosses_any(ps, e, edges_))
        throw Error(Errc::CrossingInput,
                    "edge set is not maximal: diagonal " + std::to_string(i) +
                        "-" + std::to_string(j) + " can be added");
    }
}

// An empty triangle whose three edges are present is a face: no edge can
// enter its interior without crossing a side or having an endpoint inside.
std::vector<int> Triangulation::face_apexes(Edge e) const {
  const PointSet& ps = *ps_;
  std::vector<int> common;
  std::set_intersection(adj_[e.a].begin(), adj_[e.a].end(), adj_[e.b].begin(),
                        adj_[e.b].end(), std::back_inserter(common));
  std::vector<int> apexes;
  for (int k : common) {
    Orientation o = orientation(ps[e.a], ps[e.b], ps[k]);
    if (o == Orientation::Collinear) continue;
    // Orient the triangle ccw, then p is in the closed triangle iff it is not
    // strictly right of any side.
    int u = e.a, v = e.b;
    if (o == Orientation::Clockwise) std::swap(u, v);
    bool empty = true;
    for (const Point& p : ps.points()) {
      if (p.id == e.a || p.id == e.b || p.id == k) continue;
      if (orientation(ps[u], ps[v], p) != Orientation::Clockwise &&
          orientation(ps[v], ps[k], p) != Orientation::Clockwise &&
          orientation(ps[k], ps[u], p) != Orientation::Clockwise) {
        empty = false;
        break;
      }
    }
    if (empty) apexes.push_back(k);
  }
  return apexes;
}

std::vector<std::array<int, 3>> Triangulation::faces() const {
  std::set<std::array<int, 3>> out;
  for (const Edge& e : edges_)
    for (int k : face_apexes(e)) {
      std::array<int, 3> tri{e.a, e.b, k};
      std::sort(tri.begin(), tri.end());
      out.insert(tri);
    }
  return {out.begin(), out.end()};
}

std::vector<Flip> flippable_edges(const Triangulation& t) {
  const PointSet& ps = t.points();
  std::vector<Flip> flips;
  for (const Edge& e : t.edges()) {
    std::vector<int> apexes = t.face_apexes(e);
    if (apexes.size() != 2) continue;
    // Strictly convex link <=> the replacement diagonal crosses e properly.
    if (!segments_cross(ps[e.a], ps[e.b], ps[apexes[0]], ps[apexes[1]]))
      continue;
    flips.push_back(Flip{e, Edge(apexes[0], apexes[1])});
  }
  return flips;
}

Triangulation apply_flip(const Triangulation& t, const Flip& f) {
  const PointSet& ps = t.points();
  if (!t.contains(f.removed))
    throw Error(Errc::NotFlippable, "removed edge not in triangulation");
  std::vector<int> apexes = t.face_apexes(f.removed);
  if (apexes.size() != 2 || Edge(apexes[0], apexes[1]) != f.inserted ||
      !segments_cross(ps[f.removed.a], ps[f.removed.b], ps[f.inserted.a],
                      ps[f.inserted.b]))
    throw Error(Errc::NotFlippable, "flip does not match the local quad");
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (const Edge& e : t.edges())
    if (e != f.removed) edges.push_back(e);
  edges.push_back(f.inserted);
  return Triangulation(ps, std::move(edges), /*validate=*/false);
}

ShearedFrame decocircularize(const PointSet& ps) {
  const int n = ps.size();
  Int modulus = Int(1) << 32;

  // Precompute which 4-subsets are entirely collinear: those stay degenerate
  // under any shear and never feed an incircle test.
  auto fully_collinear = [&](int a, int b, int c, int d) {
    return orientation(ps[a], ps[b], ps[c]) == Orientation::Collinear &&
           orientation(ps[a], ps[b], ps[d]) == Orientation::Collinear &&
           orientation(ps[a], ps[c], ps[d]) == Orientation::Collinear;
  };

  long long subsets = 1;
  for (int i = 0; i < 4 && i < n; ++i) subsets = subsets * (n - i) / (i + 1);
  long long k_limit = 3 * subsets + 2;  // cocircularity is cubic in the shear

  for (int escalation = 0; escalation < 4; ++escalation) {
    for (long long k = 0; k <= k_limit; ++k) {
      PointSet sheared = [&] {
        std::vector<std::pair<Int, Int>> coords;
        coords.reserve(n);
        for (const Point& p : ps.points())
          coords.emplace_back(p.x * modulus + Int(k) * p.y, p.y * modulus);
        return PointSet::from_coords(coords);
      }();
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = a + 1; b < n && ok; ++b)
          for (int c = b + 1; c < n && ok; ++c)
            for (int d = c + 1; d < n && ok; ++d) {
              if (fully_collinear(a, b, c, d)) continue;
              int t = c;
              if (orientation(sheared[a], sheared[b], sheared[t]) ==
                  Orientation::Collinear)
                t = d;
              int fourth = (t == c) ? d : c;
              if (in_circle(sheared[a], sheared[b], sheared[t],
                            sheared[fourth]) == InCircleResult::Cocircular)
                ok = false;
            }
      if (ok)
        return ShearedFrame{&ps, std::move(sheared), Int(k), modulus};
    }
    modulus <<= 16;
  }
  throw Error(Errc::Internal, "decocircularize: no shear parameter found");
}

Triangulation complete_to_triangulation(const PointSet& ps,
                                        const std::vector<Edge>& seed) {
  for (const Edge& e : seed)
    if (!is_diagonal(ps, e.a, e.b))
      throw Error(Errc::CrossingInput,
                  "seed edge " + std::to_string(e.a) + "-" +
                      std::to_string(e.b) + " is not a diagonal");
  for (std::size_t i = 0; i < seed.size(); ++i)
    for (std::size_t j = i + 1; j < seed.size(); ++j)
      if (segments_cross(ps[seed[i].a], ps[seed[i].b], ps[seed[j].a],
                         ps[seed[j].b]))
        throw Error(Errc::CrossingInput, "seed edges cross");
  std::vector<Edge> edges = seed;
  for (int i = 0; i < ps.size(); ++i)
    for (int j = i + 1; j < ps.size(); ++j) {
      Edge e(i, j);
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
      if (!is_diagonal(ps, i, j)) continue;
      if (!crosses_any(ps, e, edges)) edges.push_back(e);
    }
  return Triangulation(ps, std::move(edges), /*validate=*/false);
}

// Lawson flipping toward the frame's unique Delaunay triangulation.
static Triangulation lawson(const PointSet& ps, const ShearedFrame& frame,
                            Triangulation t) {
  const PointSet& f = frame.sheared;
  bool improved = true;
  while (improved) {
    improved = false;
    for (const Edge& e : t.edges()) {
      std::vector<int> apexes = t.face_apexes(e);
      if (apexes.size() != 2) continue;
      if (!segments_cross(ps[e.a], ps[e.b], ps[apexes[0]], ps[apexes[1]]))
        continue;
      if (in_circle(f[e.a], f[apexes[0]], f[e.b], f[apexes[1]]) ==
          InCircleResult::Inside) {
        t = apply_flip(t, Flip{e, Edge(apexes[0], apexes[1])});
        improved = true;
        break;
      }
    }
  }
  return t;
}

Triangulation delaunay(const PointSet& ps, const ShearedFrame& frame) {
  if (ps.size() < 3 || all_collinear(ps))
    throw Error(Errc::DegenerateInput, "all points are collinear");
  return lawson(ps, frame, complete_to_triangulation(ps, {}));
}

Triangulation delaunay(const PointSet& ps) {
  return delaunay(ps, decocircularize(ps));
}

Flip delaunay_flip(const ShearedFrame& frame, Edge ac, const Triangulation& t) {
  const PointSet& ps = t.points();
  const PointSet& f = frame.sheared;
  if (!t.contains(ac))
    throw Error(Errc::NotInTriangulation,
                "edge " + std::to_string(ac.a) + "-" + std::to_string(ac.b) +
                    " not in triangulation");
  Triangulation dt = delaunay(ps, frame);
  if (dt.contains(ac))
    throw Error(Errc::AlreadyDelaunay, "edge is a Delaunay edge");
  std::vector<int> apexes = t.face_apexes(ac);
  if (apexes.size() == 2 &&
      segments_cross(ps[ac.a], ps[ac.b], ps[apexes[0]], ps[apexes[1]]) &&
      in_circle(f[ac.a], f[apexes[0]], f[ac.b], f[apexes[1]]) ==
          InCircleResult::Inside)
    return Flip{ac, Edge(apexes[0], apexes[1])};
  throw Error(Errc::NotFlippable,
              "edge has no Delaunay flip in this triangulation");
}

Flip delaunay_flip(const PointSet& ps, Edge ac, const Triangulation& t) {
  return delaunay_flip(decocircularize(ps), ac, t);
}

std::vector<Flip> flips_to_delaunay(const Triangulation& t,
                                    const ShearedFrame& frame,
                                    const Triangulation& dt) {
  const PointSet& ps = t.points();
  const PointSet& f = frame.sheared;
  std::vector<Flip> seq;
  Triangulation cur = t;
  while (!(cur == dt)) {
    bool flipped = false;
    for (const Edge& e : cur.edges()) {  // already in lexicographic order
      if (dt.contains(e)) continue;
      std::vector<int> apexes = cur.face_apexes(e);
      if (apexes.size() != 2) continue;
      if (!segments_cross(ps[e.a], ps[e.b], ps[apexes[0]], ps[apexes[1]]))
        continue;
      if (in_circle(f[e.a], f[apexes[0]], f[e.b], f[apexes[1]]) !=
          InCircleResult::Inside)
        continue;
      Flip fl{e, Edge(apexes[0], apexes[1])};
      cur = apply_flip(cur, fl);
      seq.push_back(fl);
      flipped = true;
      break;
    }
    if (!flipped)
      throw Error(Errc::Internal, "no Delaunay flip available before DT");
  }
  return seq;
}

std::vector<Flip> flips_to_delaunay(const Triangulation& t) {
  ShearedFrame frame = decocircularize(t.points());
  Triangulation dt = delaunay(t.points(), frame);
  return flips_to_delaunay(t, frame, dt);
}

}  // namespace flipcube
