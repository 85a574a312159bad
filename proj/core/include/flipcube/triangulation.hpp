#pragma once

#include <array>
#include <optional>
#include <vector>

#include "flipcube/geom.hpp"

namespace flipcube {

struct Flip {
  Edge removed;
  Edge inserted;
  auto operator<=>(const Flip&) const = default;
};

/// Maximal set of pairwise non-crossing diagonals over a point set.
/// Immutable value; flips produce new triangulations.
class Triangulation {
 public:
  Triangulation(const PointSet& ps, std::vector<Edge> edges,
                bool validate = true);

  const PointSet& points() const { return *ps_; }
  const std::vector<Edge>& edges() const { return edges_; }  // sorted
  bool contains(Edge e) const;

  /// Bounded triangular faces as sorted id triples.
  std::vector<std::array<int, 3>> faces() const;

  /// The (zero, one, or two) third vertices of the triangular faces incident
  /// to edge e.
  std::vector<int> face_apexes(Edge e) const;

  bool operator==(const Triangulation& o) const { return edges_ == o.edges_; }

 private:
  const PointSet* ps_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;

  void build_adjacency();
  void validate() const;
};

/// A shear of the original point set after which no four points are
/// cocircular.  Orientation structure is preserved exactly, so diagonals,
/// empty k-gons, triangulations, QG, and FG are identical to the original's.
struct ShearedFrame {
  const PointSet* original = nullptr;
  PointSet sheared;  // same ids, coordinates (x*scale + k*y, y*scale)
  Int shear_k;
  Int scale;
};

/// Finds the first shear k = 0, 1, 2, ... (at fixed modulus) whose image has
/// no cocircular 4-subset.  Quartic in |P|; desk scale only.
ShearedFrame decocircularize(const PointSet& ps);

/// Unique Delaunay triangulation of the sheared frame, reported in original
/// ids.  Throws Errc::DegenerateInput if all points are collinear.
Triangulation delaunay(const PointSet& ps);
Triangulation delaunay(const PointSet& ps, const ShearedFrame& frame);

/// Deterministic greedy completion of a non-crossing diagonal set to a full
/// triangulation (remaining diagonals inserted in lexicographic id order).
Triangulation complete_to_triangulation(const PointSet& ps,
                                        const std::vector<Edge>& edges);

/// All flips available in T: interior edges whose two incident triangles form
/// a strictly convex quadrilateral, paired with the crossing replacement.
std::vector<Flip> flippable_edges(const Triangulation& t);

/// Applies one flip, returning the new triangulation.  Throws
/// Errc::NotFlippable if f is not a valid flip of t.
Triangulation apply_flip(const Triangulation& t, const Flip& f);

/// The Delaunay flip of diagonal ac within T: the flip replacing ac whose
/// inserted diagonal is the Delaunay diagonal of the surrounding empty
/// quadrilateral (decided in the sheared frame).
Flip delaunay_flip(const PointSet& ps, Edge ac, const Triangulation& t);
Flip delaunay_flip(const ShearedFrame& frame, Edge ac, const Triangulation& t);

/// Sequence of Delaunay flips from T to delaunay(P).  At each step the
/// lexicographically least non-Delaunay edge admitting a Delaunay flip is
/// flipped.
std::vector<Flip> flips_to_delaunay(const Triangulation& t);
std::vector<Flip> flips_to_delaunay(const Triangulation& t,
                                    const ShearedFrame& frame,
                                    const Triangulation& dt);

}  // namespace flipcube
