#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "flipcube/quadgraph.hpp"
#include "flipcube/triangulation.hpp"

namespace flipcube {

/// Graph with one vertex per triangulation of P and one edge per flip.
struct FlipGraph {
  const PointSet* points = nullptr;
  std::vector<std::vector<Edge>> vertices;   // canonical sorted edge lists
  std::vector<std::pair<int, int>> adjacency;  // vertex-id pairs, u < v
  std::map<std::vector<Edge>, int> index;

  int find(const Triangulation& t) const;
  std::vector<std::vector<int>> adjacency_lists() const;
  std::vector<int> bfs_distances(int source) const;
};

/// BFS enumeration of the full flip graph starting from the Delaunay
/// triangulation.  Throws Errc::BudgetExceeded past max_vertices.
FlipGraph enumerate_flip_graph(const PointSet& ps,
                               long long max_vertices = 200000);

/// Bitvector with one bit per QG forest edge, grouped by tree; the set bits
/// of a triangulation's label are the root paths of its representative
/// diagonals.
struct CubeLabel {
  std::vector<std::uint64_t> words;
  int size = 0;

  bool bit(int i) const { return (words[i / 64] >> (i % 64)) & 1; }
  void set(int i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
  int popcount() const;
};

int hamming(const CubeLabel& a, const CubeLabel& b);

/// Lazy cube_labels map for a pentagon-free point set: Hamming distance
/// between labels equals flip distance.  Throws Errc::PentagonExists at
/// construction otherwise.
class CubeLabeler {
 public:
  explicit CubeLabeler(const PointSet& ps);

  CubeLabel label(const Triangulation& t) const;
  int bit_count() const { return bits_; }
  const QuadGraph& qg() const { return qg_; }

 private:
  const PointSet* ps_;
  QuadGraph qg_;
  int bits_ = 0;
  std::vector<int> parent_;     // QG vertex -> parent vertex (-1 at roots)
  std::vector<int> parent_bit_;  // QG vertex -> bit of the edge to parent
};

struct FlipNumber {
  Edge diagonal;
  int value = 0;
};

/// Exact flip distance between triangulations of a pentagon-free set,
/// computed as the symmetric difference of the two Delaunay flip sequences.
int flip_distance_pentagon_free(const Triangulation& t1,
                                const Triangulation& t2);

/// Minimum flips from the Delaunay triangulation to one containing d,
/// found by A* with the number of edges crossing d as the heuristic.
FlipNumber flip_number(const PointSet& ps, Edge d);

/// Minimum-weight perfect matching between the diagonal sets of T1 and T2
/// under QG distances; a lower bound on flip distance, tight for
/// pentagon-free sets and the convex pentagon.
long long matching_lower_bound(const Triangulation& t1,
                               const Triangulation& t2, const QuadGraph& qg);

/// Djoković–Winkler partial-cube test.  Throws Errc::Disconnected on a
/// disconnected graph and Errc::BudgetExceeded past a few thousand vertices.
bool is_partial_cube(const FlipGraph& g);
bool is_partial_cube(int n, const std::vector<std::pair<int, int>>& edges);

/// Ground-truth distance by BFS over the enumerated flip graph.
int flip_distance_exact_oracle(const Triangulation& t1,
                               const Triangulation& t2,
                               long long max_vertices = 200000);
int flip_distance_exact_oracle(const FlipGraph& g, const Triangulation& t1,
                               const Triangulation& t2);

/// A* over triangulation space with the matching bound as admissible
/// heuristic; exact for general sets at desk scale without full enumeration.
int astar_flip_distance(const Triangulation& t1, const Triangulation& t2,
                        long long max_expansions = 200000);

}  // namespace flipcube
