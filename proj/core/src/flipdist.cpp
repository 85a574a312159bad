#include "flipcube/flipdist.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

namespace flipcube {

int FlipGraph::find(const Triangulation& t) const {
  auto it = index.find(t.edges());
  return it == index.end() ? -1 : it->second;
}

std::vector<std::vector<int>> FlipGraph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& [u, v] : adjacency) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<int> FlipGraph::bfs_distances(int source) const {
  auto adj = adjacency_lists();
  std::vector<int> dist(vertices.size(), -1);
  dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

namespace {

// Sorted edge list after swapping one edge out for another.
std::vector<Edge> with_flip(const std::vector<Edge>& edges, const Flip& f) {
  std::vector<Edge> out = edges;
  out.erase(std::lower_bound(out.begin(), out.end(), f.removed));
  out.insert(std::upper_bound(out.begin(), out.end(), f.inserted), f.inserted);
  return out;
}

Triangulation start_triangulation(const PointSet& ps) {
  if (ps.size() < 3 || all_collinear(ps))
    return complete_to_triangulation(ps, {});
  return delaunay(ps);
}

}  // namespace

FlipGraph enumerate_flip_graph(const PointSet& ps, long long max_vertices) {
  FlipGraph g;
  g.points = &ps;
  Triangulation start = start_triangulation(ps);
  g.vertices.push_back(start.edges());
  g.index.emplace(start.edges(), 0);
  std::set<std::pair<int, int>> seen_edges;
  std::queue<int> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    Triangulation t(ps, g.vertices[u], false);
    for (const Flip& f : flippable_edges(t)) {
      std::vector<Edge> nb = with_flip(g.vertices[u], f);
      auto [it, fresh] = g.index.emplace(nb, static_cast<int>(g.vertices.size()));
      if (fresh) {
        if (static_cast<long long>(g.vertices.size()) >= max_vertices)
          throw Error(Errc::BudgetExceeded,
                      "flip graph exceeds vertex budget");
        g.vertices.push_back(std::move(nb));
        bfs.push(it->second);
      }
      seen_edges.emplace(std::min(u, it->second), std::max(u, it->second));
    }
  }
  g.adjacency.assign(seen_edges.begin(), seen_edges.end());
  return g;
}

int CubeLabel::popcount() const {
  int c = 0;
  for (std::uint64_t w : words) c += std::popcount(w);
  return c;
}

int hamming(const CubeLabel& a, const CubeLabel& b) {
  if (a.size != b.size)
    throw Error(Errc::MismatchedPointSets, "labels of different cubes");
  int c = 0;
  for (size_t i = 0; i < a.words.size(); ++i)
    c += std::popcount(a.words[i] ^ b.words[i]);
  return c;
}

CubeLabeler::CubeLabeler(const PointSet& ps)
    : ps_(&ps), qg_(build_qg_pentagon_free(ps, true)) {
  const int nv = static_cast<int>(qg_.vertices.size());
  parent_.assign(nv, -1);
  parent_bit_.assign(nv, -1);
  std::vector<int> comp = qg_.component_ids();
  // One bit per QG edge, grouped by tree.
  std::vector<int> order(qg_.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return comp[qg_.edges[a].first] < comp[qg_.edges[b].first];
  });
  const auto& orient = *qg_.orientation;
  for (int bit = 0; bit < static_cast<int>(order.size()); ++bit) {
    int e = order[bit];
    auto [u, v] = qg_.edges[e];
    int from = orient[e] == 0 ? u : v;
    if (parent_[from] != -1)
      throw Error(Errc::Internal, "diagonal with two Delaunay flips");
    parent_[from] = orient[e] == 0 ? v : u;
    parent_bit_[from] = bit;
  }
  bits_ = static_cast<int>(qg_.edges.size());
}

CubeLabel CubeLabeler::label(const Triangulation& t) const {
  if (!(t.points() == *ps_))
    throw Error(Errc::MismatchedPointSets,
                "triangulation is over a different point set");
  CubeLabel lab;
  lab.size = bits_;
  lab.words.assign((bits_ + 63) / 64, 0);
  std::vector<int> comp = qg_.component_ids();
  std::set<int> seen;
  for (const Edge& e : t.edges()) {
    int v = qg_.vertex_index(e);
    if (v < 0)
      throw Error(Errc::Internal, "triangulation edge is not a diagonal");
    if (!seen.insert(comp[v]).second)
      throw Error(Errc::Internal, "two triangulation diagonals in one tree");
    for (int w = v; parent_[w] != -1; w = parent_[w]) lab.set(parent_bit_[w]);
  }
  return lab;
}

int flip_distance_pentagon_free(const Triangulation& t1,
                                const Triangulation& t2) {
  if (!(t1.points() == t2.points()))
    throw Error(Errc::MismatchedPointSets,
                "triangulations are over different point sets");
  const PointSet& ps = t1.points();
  if (find_empty_pentagon(ps))
    throw Error(Errc::PentagonExists,
                "point set has an empty pentagon; distance not exact");
  ShearedFrame frame = decocircularize(ps);
  Triangulation dt = delaunay(ps, frame);
  std::vector<Flip> s1 = flips_to_delaunay(t1, frame, dt);
  std::vector<Flip> s2 = flips_to_delaunay(t2, frame, dt);
  std::set<Flip> a(s1.begin(), s1.end()), b(s2.begin(), s2.end());
  if (a.size() != s1.size() || b.size() != s2.size())
    throw Error(Errc::Internal, "repeated flip in Delaunay flip sequence");
  int sym = 0;
  for (const Flip& f : a) sym += !b.count(f);
  for (const Flip& f : b) sym += !a.count(f);
  return sym;
}

FlipNumber flip_number(const PointSet& ps, Edge d) {
  if (d.a < 0 || d.b >= ps.size() || d.a == d.b ||
      !is_diagonal(ps, d.a, d.b))
    throw Error(Errc::NotADiagonal, "edge is not a diagonal of the point set");
  Triangulation dt = delaunay(ps);
  auto crossings = [&](const std::vector<Edge>& edges) {
    int c = 0;
    for (const Edge& e : edges)
      if (segments_cross(ps[e.a], ps[e.b], ps[d.a], ps[d.b])) ++c;
    return c;
  };
  // A* from the Delaunay triangulation.  A flip removes at most one edge
  // crossing d, so the crossing count is an admissible and consistent
  // heuristic, and a maximal triangulation with no edge crossing d must
  // contain d, so the goal test is "zero crossings".
  using State = std::tuple<int, int, std::vector<Edge>>;  // f, g, edges
  std::priority_queue<State, std::vector<State>, std::greater<State>> open;
  std::map<std::vector<Edge>, int> best_g;
  open.emplace(crossings(dt.edges()), 0, dt.edges());
  best_g[dt.edges()] = 0;
  while (!open.empty()) {
    auto [f, gc, edges] = open.top();
    open.pop();
    if (gc > best_g[edges]) continue;  // stale entry
    if (f == gc) return {d, gc};       // heuristic zero: d is present
    Triangulation t(ps, edges);
    for (const Flip& flip : flippable_edges(t)) {
      Triangulation next = apply_flip(t, flip);
      int ng = gc + 1;
      auto [it, inserted] = best_g.try_emplace(next.edges(), ng);
      if (!inserted && it->second <= ng) continue;
      it->second = ng;
      open.emplace(ng + crossings(next.edges()), ng, next.edges());
    }
  }
  throw Error(Errc::Internal, "no triangulation contains the diagonal");
}

namespace {

// Exact min-cost assignment (Hungarian algorithm with potentials, O(k^3)).
// Returns the column matched to each row.
std::vector<int> assignment(const std::vector<std::vector<long long>>& a) {
  const int n = static_cast<int>(a.size());
  const long long INF = LLONG_MAX / 4;
  std::vector<long long> u(n + 1), v(n + 1);
  std::vector<int> p(n + 1), way(n + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<long long> minv(n + 1, INF);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      long long delta = INF;
      for (int j = 1; j <= n; ++j)
        if (!used[j]) {
          long long cur = a[i0 - 1][j - 1] - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
          if (minv[j] < delta) {
            delta = minv[j];
            j1 = j;
          }
        }
      for (int j = 0; j <= n; ++j)
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

std::vector<int> qg_distances_from(const QuadGraph& qg,
                                   const std::vector<std::vector<int>>& adj,
                                   int source) {
  std::vector<int> dist(qg.vertices.size(), -1);
  dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

long long matching_bound_impl(const std::vector<Edge>& e1,
                              const std::vector<Edge>& e2,
                              const QuadGraph& qg,
                              const std::vector<std::vector<int>>& adj) {
  const int k = static_cast<int>(e1.size());
  if (k != static_cast<int>(e2.size()))
    throw Error(Errc::Internal, "triangulations of unequal size");
  auto to_vertex = [&](Edge e) {
    int v = qg.vertex_index(e);
    if (v < 0)
      throw Error(Errc::Internal, "triangulation edge missing from QG");
    return v;
  };
  std::vector<int> v1(k), v2(k);
  for (int i = 0; i < k; ++i) v1[i] = to_vertex(e1[i]);
  for (int i = 0; i < k; ++i) v2[i] = to_vertex(e2[i]);
  const long long nv = static_cast<long long>(qg.vertices.size());
  const long long sentinel = nv * nv + 1;
  std::vector<std::vector<long long>> w(k, std::vector<long long>(k));
  for (int i = 0; i < k; ++i) {
    std::vector<int> dist = qg_distances_from(qg, adj, v1[i]);
    for (int j = 0; j < k; ++j)
      w[i][j] = dist[v2[j]] >= 0 ? dist[v2[j]] : sentinel;
  }
  std::vector<int> match = assignment(w);
  long long total = 0;
  for (int i = 0; i < k; ++i) {
    if (w[i][match[i]] >= sentinel)
      throw Error(Errc::Internal, "matching crossed QG components");
    total += w[i][match[i]];
  }
  return total;
}

}  // namespace

long long matching_lower_bound(const Triangulation& t1,
                               const Triangulation& t2, const QuadGraph& qg) {
  if (!(t1.points() == t2.points()))
    throw Error(Errc::MismatchedPointSets,
                "triangulations are over different point sets");
  return matching_bound_impl(t1.edges(), t2.edges(), qg, qg.adjacency());
}

bool is_partial_cube(const FlipGraph& g) {
  return is_partial_cube(static_cast<int>(g.vertices.size()), g.adjacency);
}

bool is_partial_cube(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // Connectivity and bipartiteness in one sweep; odd cycles rule out a
  // hypercube embedding before any quadratic work.
  std::vector<int> color(n, -1);
  color[0] = 0;
  std::queue<int> bfs;
  bfs.push(0);
  int reached = 1;
  bool bipartite = true;
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (int v : adj[u]) {
      if (color[v] < 0) {
        color[v] = color[u] ^ 1;
        ++reached;
        bfs.push(v);
      } else if (color[v] == color[u]) {
        bipartite = false;
      }
    }
  }
  if (reached < n) throw Error(Errc::Disconnected, "flip graph disconnected");
  if (!bipartite) return false;
  if (n > 4096)
    throw Error(Errc::BudgetExceeded, "partial-cube check beyond desk scale");

  std::vector<std::vector<int>> dist(n);
  for (int s = 0; s < n; ++s) {
    dist[s].assign(n, -1);
    dist[s][s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u])
        if (dist[s][v] < 0) {
          dist[s][v] = dist[s][u] + 1;
          q.push(v);
        }
    }
  }

  const int m = static_cast<int>(edges.size());
  auto related = [&](int i, int j) {
    auto [x, y] = edges[i];
    auto [u, v] = edges[j];
    return dist[x][u] + dist[y][v] != dist[x][v] + dist[y][u];
  };
  // Djokovic-Winkler classes via union-find, then a second pass checks the
  // relation is transitive (class membership must coincide with relatedness).
  std::vector<int> cls(m);
  std::iota(cls.begin(), cls.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (cls[x] != x) x = cls[x] = cls[cls[x]];
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (related(i, j)) {
        int a = find(i), b = find(j);
        if (a != b) cls[b] = a;
      }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if ((find(i) == find(j)) != related(i, j)) return false;

  std::vector<int> class_id(m, -1);
  int classes = 0;
  for (int i = 0; i < m; ++i)
    if (find(i) == i) class_id[i] = classes++;
  for (int i = 0; i < m; ++i) class_id[i] = class_id[find(i)];

  // Each class must split the graph into exactly two sides with all class
  // edges straddling; the side bits give the hypercube labels.
  const int words = (classes + 63) / 64;
  std::vector<std::vector<std::uint64_t>> label(
      n, std::vector<std::uint64_t>(words, 0));
  std::vector<std::vector<std::pair<int, int>>> inc(n);  // (neighbor, edge id)
  for (int e = 0; e < m; ++e) {
    auto [u, v] = edges[e];
    inc[u].emplace_back(v, e);
    inc[v].emplace_back(u, e);
  }
  for (int c = 0; c < classes; ++c) {
    std::vector<int> side(n, -1);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
      if (side[s] >= 0) continue;
      if (comps >= 2) return false;
      int tag = comps++;
      side[s] = tag;
      std::queue<int> q;
      q.push(s);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (auto [v, e] : inc[u]) {
          if (class_id[e] == c || side[v] >= 0) continue;
          side[v] = tag;
          q.push(v);
        }
      }
    }
    if (comps != 2) return false;
    for (int e = 0; e < m; ++e)
      if (class_id[e] == c && side[edges[e].first] == side[edges[e].second])
        return false;
    for (int v = 0; v < n; ++v)
      if (side[v] == 1) label[v][c / 64] |= std::uint64_t{1} << (c % 64);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int h = 0;
      for (int w = 0; w < words; ++w) h += std::popcount(label[u][w] ^ label[v][w]);
      if (h != dist[u][v]) return false;
    }
  return true;
}

int flip_distance_exact_oracle(const Triangulation& t1,
                               const Triangulation& t2,
                               long long max_vertices) {
  if (!(t1.points() == t2.points()))
    throw Error(Errc::MismatchedPointSets,
                "triangulations are over different point sets");
  FlipGraph g = enumerate_flip_graph(t1.points(), max_vertices);
  return flip_distance_exact_oracle(g, t1, t2);
}

int flip_distance_exact_oracle(const FlipGraph& g, const Triangulation& t1,
                               const Triangulation& t2) {
  int a = g.find(t1), b = g.find(t2);
  if (a < 0 || b < 0)
    throw Error(Errc::Internal, "triangulation missing from flip graph");
  int d = g.bfs_distances(a)[b];
  if (d < 0) throw Error(Errc::Disconnected, "flip graph disconnected");
  return d;
}

int astar_flip_distance(const Triangulation& t1, const Triangulation& t2,
                        long long max_expansions) {
  if (!(t1.points() == t2.points()))
    throw Error(Errc::MismatchedPointSets,
                "triangulations are over different point sets");
  const PointSet& ps = t1.points();
  QuadGraph qg = build_qg_general(ps, false);
  auto adj = qg.adjacency();
  auto h = [&](const std::vector<Edge>& edges) {
    return matching_bound_impl(edges, t2.edges(), qg, adj);
  };
  std::map<std::vector<Edge>, long long> best_g;
  using Entry = std::pair<long long, std::vector<Edge>>;  // (f, key)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  best_g[t1.edges()] = 0;
  open.emplace(h(t1.edges()), t1.edges());
  long long expansions = 0;
  while (!open.empty()) {
    auto [f, key] = open.top();
    open.pop();
    long long gcur = best_g[key];
    if (f > gcur + h(key)) continue;  // stale entry
    if (key == t2.edges()) return static_cast<int>(gcur);
    if (++expansions > max_expansions)
      throw Error(Errc::BudgetExceeded, "A* expansion budget exceeded");
    Triangulation t(ps, key, false);
    for (const Flip& fl : flippable_edges(t)) {
      std::vector<Edge> nb = with_flip(key, fl);
      auto it = best_g.find(nb);
      if (it != best_g.end() && it->second <= gcur + 1) continue;
      best_g[nb] = gcur + 1;
      open.emplace(gcur + 1 + h(nb), std::move(nb));
    }
  }
  throw Error(Errc::Disconnected, "target unreachable by flips");
}

}  // namespace flipcube
