#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flipcube/triangulation.hpp"

namespace flipcube {

/// Five point ids in strictly convex position bounding an empty pentagon,
/// in counterclockwise order.
struct PentagonWitness {
  std::array<int, 5> ids;
};

/// Graph on the diagonals of a point set; edges join crossing diagonal pairs
/// whose four endpoints form an empty quadrilateral.  For pentagon-free sets
/// this graph is a forest whose trees are oriented toward a unique Delaunay
/// diagonal (the root).
struct QuadGraph {
  std::vector<Edge> vertices;                 // all diagonals, sorted
  std::vector<std::pair<int, int>> edges;     // vertex-index pairs, u < v
  // Per edge, 0 = first vertex flips toward second (second is the Delaunay
  // diagonal of the shared empty quadrilateral), 1 = the reverse.
  std::optional<std::vector<std::int8_t>> orientation;
  std::optional<std::vector<int>> roots;      // sink vertex per component

  int vertex_index(Edge d) const;
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> component_ids(int* count = nullptr) const;
  bool is_forest() const;
};

/// Shear (x, y) -> (x, y + k*x) with the least k >= 0 giving pairwise
/// distinct y-coordinates.  Orientation structure is preserved exactly.
PointSet shear_distinct_y(const PointSet& ps, Int* k_out = nullptr);

/// Ids of the points strictly above q, in counterclockwise radial order
/// around q; points collinear with q are ordered nearest-first.  Requires
/// pairwise distinct y-coordinates.
std::vector<int> radial_order_above(const PointSet& sheared, int q);

/// Radial orders for every point, computed over the internally sheared set
/// (ids refer to the input).
std::vector<std::vector<int>> radial_orders(const PointSet& ps);

/// Linear-time test for an empty pentagon having q as its lowest vertex,
/// given the radial order of the points above q.  Operates on a point set
/// with pairwise distinct y-coordinates.
std::optional<PentagonWitness> pentagon_at_apex(const PointSet& sheared, int q,
                                                std::span<const int> above);

/// First empty-pentagon witness in lowest-apex-first scan order, or nullopt.
std::optional<PentagonWitness> find_empty_pentagon(const PointSet& ps);

/// Radial-fan construction of the quadrilateral graph; valid only for
/// pentagon-free sets (throws Errc::PentagonExists when the fan uncovers an
/// empty pentagon).  With orient=true the forest is oriented toward the
/// Delaunay roots, which requires a decocircularized frame (desk scale).
QuadGraph build_qg_pentagon_free(const PointSet& ps, bool orient = true);

/// Brute-force quadrilateral graph over all diagonal pairs; oracle for the
/// fast path.  Desk scale.
QuadGraph build_qg_general(const PointSet& ps, bool orient = true);

/// Number of 4-subsets forming an empty quadrilateral (= QG edge count).
long long count_empty_quadrilaterals(const PointSet& ps);

bool has_empty_quadrilateral(const PointSet& ps);

/// Independent of has_empty_quadrilateral: builds one triangulation and
/// checks that it admits no flip.
bool has_unique_triangulation(const PointSet& ps);

}  // namespace flipcube
