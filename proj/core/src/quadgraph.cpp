#include "flipcube/quadgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace flipcube {

int QuadGraph::vertex_index(Edge d) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), d);
  if (it == vertices.end() || *it != d) return -1;
  return static_cast<int>(it - vertices.begin());
}

std::vector<std::vector<int>> QuadGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<int> QuadGraph::component_ids(int* count) const {
  std::vector<int> comp(vertices.size(), -1);
  auto adj = adjacency();
  int c = 0;
  for (int s = 0; s < static_cast<int>(vertices.size()); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int v : adj[u])
        if (comp[v] < 0) {
          comp[v] = c;
          bfs.push(v);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool QuadGraph::is_forest() const {
  int comps = 0;
  component_ids(&comps);
  return edges.size() == vertices.size() - static_cast<size_t>(comps);
}

PointSet shear_distinct_y(const PointSet& ps, Int* k_out) {
  const int n = ps.size();
  // y_i + k*x_i == y_j + k*x_j exactly when k*(x_i - x_j) == y_j - y_i, so
  // each pair with distinct x rules out at most one integer k.
  std::vector<Int> bad;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Int dx = ps[i].x - ps[j].x;
      if (dx == 0) continue;  // y already distinct (points are distinct)
      Int dy = ps[j].y - ps[i].y;
      if (dy % dx != 0) continue;
      Int k = dy / dx;
      if (k >= 0) bad.push_back(std::move(k));
    }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  Int k = 0;
  for (const Int& b : bad) {
    if (b > k) break;
    if (b == k) ++k;
  }
  std::vector<Point> sheared;
  sheared.reserve(n);
  for (const Point& p : ps.points())
    sheared.push_back(Point{p.x, p.y + k * p.x, p.id});
  if (k_out) *k_out = k;
  return PointSet(std::move(sheared));
}

std::vector<int> radial_order_above(const PointSet& sheared, int q) {
  const Point& pq = sheared[q];
  std::vector<int> above;
  for (int i = 0; i < sheared.size(); ++i)
    if (sheared[i].y > pq.y) above.push_back(i);
  std::sort(above.begin(), above.end(), [&](int i, int j) {
    Int ux = sheared[i].x - pq.x, uy = sheared[i].y - pq.y;
    Int vx = sheared[j].x - pq.x, vy = sheared[j].y - pq.y;
    Int cr = ux * vy - uy * vx;
    if (cr != 0) return cr > 0;
    return ux * ux + uy * uy < vx * vx + vy * vy;  // same ray: nearer first
  });
  return above;
}

std::vector<std::vector<int>> radial_orders(const PointSet& ps) {
  PointSet sheared = shear_distinct_y(ps);
  std::vector<std::vector<int>> orders;
  orders.reserve(ps.size());
  for (int q = 0; q < ps.size(); ++q)
    orders.push_back(radial_order_above(sheared, q));
  return orders;
}

namespace {

bool convex5(const PointSet& ps, int a, int b, int c, int d, int e) {
  const int v[5] = {a, b, c, d, e};
  for (int i = 0; i < 5; ++i)
    if (orientation(ps[v[i]], ps[v[(i + 1) % 5]], ps[v[(i + 2) % 5]]) !=
        Orientation::CounterClockwise)
      return false;
  return true;
}

struct Fan {
  std::vector<int> kept;  // one nearest point per ray; these are the
                          // diagonals with lower endpoint q
  // Clipped faces (s, t, p) of the star polygon around q, in creation order;
  // t was the clipped vertex and (s, p) the chord that replaced it.
  std::vector<std::array<int, 3>> faces;
  // First adjacent face pair forming a convex (hence empty) pentagon with q,
  // recorded as (u, v, w, p) in radial order.
  std::optional<std::array<int, 4>> candidate;
};

// Fan-triangulates the star polygon of q over its radially ordered upper
// points by repeatedly clipping vertices that bulge away from q.  With
// stop_at_candidate the scan aborts at the first convex pentagon candidate
// and faces may be incomplete.
Fan fan_at_apex(const PointSet& ps, int q, std::span<const int> above,
                bool stop_at_candidate) {
  Fan fan;
  const Point& pq = ps[q];
  for (int id : above) {
    if (!fan.kept.empty() &&
        orientation(pq, ps[fan.kept.back()], ps[id]) == Orientation::Collinear)
      continue;  // farther point on an already-seen ray
    fan.kept.push_back(id);
  }
  std::map<Edge, int> chord_face;
  std::vector<int> stack;
  for (int p : fan.kept) {
    while (stack.size() >= 2) {
      int s = stack[stack.size() - 2];
      int t = stack.back();
      if (orientation(ps[s], ps[t], ps[p]) != Orientation::CounterClockwise)
        break;
      int fi = static_cast<int>(fan.faces.size());
      fan.faces.push_back({s, t, p});
      // Sides (s, t) and (t, p) were edges of the current polygon; each may
      // be the chord of an earlier face, making the two faces adjacent.  The
      // pair forms an empty pentagon with q exactly when the five points are
      // in convex position.
      if (!fan.candidate) {
        if (auto it = chord_face.find(Edge(s, t)); it != chord_face.end()) {
          int v = fan.faces[it->second][1];  // angularly between s and t
          if (convex5(ps, q, s, v, t, p)) fan.candidate = {s, v, t, p};
        }
      }
      if (!fan.candidate) {
        if (auto it = chord_face.find(Edge(t, p)); it != chord_face.end()) {
          int w = fan.faces[it->second][1];  // angularly between t and p
          if (convex5(ps, q, s, t, w, p)) fan.candidate = {s, t, w, p};
        }
      }
      if (fan.candidate && stop_at_candidate) return fan;
      chord_face[Edge(s, p)] = fi;
      stack.pop_back();
    }
    stack.push_back(p);
  }
  return fan;
}

}  // namespace

std::optional<PentagonWitness> pentagon_at_apex(const PointSet& sheared, int q,
                                                std::span<const int> above) {
  Fan fan = fan_at_apex(sheared, q, above, true);
  if (!fan.candidate) return std::nullopt;
  auto [u, v, w, p] = *fan.candidate;
  PentagonWitness wit{{q, u, v, w, p}};
  if (!is_empty_kgon(sheared, wit.ids))
    throw Error(Errc::Internal, "fan candidate is not an empty pentagon");
  return wit;
}

std::optional<PentagonWitness> find_empty_pentagon(const PointSet& ps) {
  if (ps.size() < 5) return std::nullopt;
  PointSet sheared = shear_distinct_y(ps);
  std::vector<int> order(ps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return sheared[i].y < sheared[j].y; });
  for (int q : order) {
    std::vector<int> above = radial_order_above(sheared, q);
    if (above.size() < 4) continue;
    if (auto wit = pentagon_at_apex(sheared, q, above)) return wit;
  }
  return std::nullopt;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

struct RawQgEdge {
  Edge d1, d2;
  std::array<int, 4> quad;  // endpoints in convex cyclic order
};

// Fills orientation and roots for a QG whose raw edges carry their defining
// quads (q0, q1, q2, q3) with diagonals (q0, q2) and (q1, q3).
void orient_qg(QuadGraph& qg, const std::vector<RawQgEdge>& raw,
               const PointSet& ps, bool require_forest) {
  ShearedFrame frame = decocircularize(ps);
  const PointSet& f = frame.sheared;
  std::vector<std::int8_t> orient(raw.size());
  std::vector<int> outdeg(qg.vertices.size(), 0);
  for (size_t i = 0; i < raw.size(); ++i) {
    const auto& [d1, d2, quad] = raw[i];
    InCircleResult r =
        in_circle(f[quad[0]], f[quad[1]], f[quad[2]], f[quad[3]]);
    if (r == InCircleResult::Cocircular)
      throw Error(Errc::Internal, "cocircular quad in sheared frame");
    // Outside: the circle through (q0, q1, q2) excludes q3, so diagonal
    // (q0, q2) is the Delaunay diagonal of the quad.
    Edge winner = r == InCircleResult::Outside ? Edge(quad[0], quad[2])
                                               : Edge(quad[1], quad[3]);
    if (winner != d1 && winner != d2)
      throw Error(Errc::Internal, "quad diagonals inconsistent");
    int wi = qg.vertex_index(winner);
    auto [u, v] = qg.edges[i];
    orient[i] = wi == v ? 0 : 1;
    outdeg[wi == v ? u : v]++;
  }
  qg.orientation = std::move(orient);

  Dsu dsu(static_cast<int>(qg.vertices.size()));
  int comps = static_cast<int>(qg.vertices.size());
  for (const auto& [u, v] : qg.edges)
    if (dsu.unite(u, v)) --comps;
  bool forest =
      qg.edges.size() == qg.vertices.size() - static_cast<size_t>(comps);
  std::map<int, std::vector<int>> sinks;  // dsu representative -> sinks
  for (int v = 0; v < static_cast<int>(qg.vertices.size()); ++v)
    if (outdeg[v] == 0) sinks[dsu.find(v)].push_back(v);
  bool unique_sinks =
      forest && static_cast<int>(sinks.size()) == comps &&
      std::all_of(sinks.begin(), sinks.end(),
                  [](const auto& kv) { return kv.second.size() == 1; });
  if (unique_sinks) {
    std::vector<int> roots;
    for (const auto& [rep, vs] : sinks) roots.push_back(vs[0]);
    std::sort(roots.begin(), roots.end());
    qg.roots = std::move(roots);
  } else if (require_forest) {
    throw Error(Errc::Internal,
                "quadrilateral graph of pentagon-free set is not a forest "
                "with unique Delaunay roots");
  }
}

}  // namespace

QuadGraph build_qg_pentagon_free(const PointSet& ps, bool orient) {
  PointSet sheared = shear_distinct_y(ps);
  QuadGraph qg;
  std::vector<RawQgEdge> raw;
  for (int q = 0; q < ps.size(); ++q) {
    std::vector<int> above = radial_order_above(sheared, q);
    Fan fan = fan_at_apex(sheared, q, above, true);
    if (fan.candidate)
      throw Error(Errc::PentagonExists,
                  "point set has an empty pentagon; use the general builder");
    for (int r : fan.kept) qg.vertices.emplace_back(q, r);
    for (const auto& [s, t, p] : fan.faces)
      raw.push_back({Edge(q, t), Edge(s, p), {q, s, t, p}});
  }
  std::sort(qg.vertices.begin(), qg.vertices.end());
  for (const auto& re : raw) {
    int i1 = qg.vertex_index(re.d1);
    int i2 = qg.vertex_index(re.d2);
    if (i1 < 0 || i2 < 0)
      throw Error(Errc::Internal, "fan chord is not a diagonal");
    qg.edges.emplace_back(std::min(i1, i2), std::max(i1, i2));
  }
  std::vector<size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](size_t a, size_t b) { return qg.edges[a] < qg.edges[b]; });
  std::vector<std::pair<int, int>> sorted_edges;
  std::vector<RawQgEdge> sorted_raw;
  sorted_edges.reserve(raw.size());
  sorted_raw.reserve(raw.size());
  for (size_t i : perm) {
    sorted_edges.push_back(qg.edges[i]);
    sorted_raw.push_back(raw[i]);
  }
  qg.edges = std::move(sorted_edges);
  if (orient) orient_qg(qg, sorted_raw, ps, true);
  return qg;
}

QuadGraph build_qg_general(const PointSet& ps, bool orient) {
  const int n = ps.size();
  QuadGraph qg;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (is_diagonal(ps, a, b)) qg.vertices.emplace_back(a, b);
  std::vector<RawQgEdge> raw;
  for (size_t i = 0; i < qg.vertices.size(); ++i)
    for (size_t j = i + 1; j < qg.vertices.size(); ++j) {
      Edge d1 = qg.vertices[i], d2 = qg.vertices[j];
      if (d1.contains(d2.a) || d1.contains(d2.b)) continue;
      if (!segments_cross(ps[d1.a], ps[d1.b], ps[d2.a], ps[d2.b])) continue;
      // Crossing diagonals alternate around their quadrilateral.
      std::array<int, 4> quad = {d1.a, d2.a, d1.b, d2.b};
      if (!is_empty_kgon(ps, quad)) continue;
      qg.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      raw.push_back({d1, d2, quad});
    }
  if (orient) orient_qg(qg, raw, ps, false);
  return qg;
}

long long count_empty_quadrilaterals(const PointSet& ps) {
  const int n = ps.size();
  long long count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int ids[4] = {a, b, c, d};
          if (is_empty_kgon(ps, ids)) ++count;
        }
  return count;
}

bool has_empty_quadrilateral(const PointSet& ps) {
  const int n = ps.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int ids[4] = {a, b, c, d};
          if (is_empty_kgon(ps, ids)) return true;
        }
  return false;
}

bool has_unique_triangulation(const PointSet& ps) {
  if (ps.size() < 3 || all_collinear(ps)) return true;
  Triangulation t = complete_to_triangulation(ps, {});
  return flippable_edges(t).empty();
}

}  // namespace flipcube
