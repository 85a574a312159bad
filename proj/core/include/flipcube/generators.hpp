#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flipcube/geom.hpp"

namespace flipcube {

enum class Family {
  Lattice,
  TwoLines,
  ThreeRays,
  TwoWedges,
  WedgeSegment,
  QuadSegment,
  LatticeHullRemoved,
  KaraRows,
  ConvexNgon,
  RandomGeneralPosition,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // Errc::InvalidParams

struct FamilySpec {
  Family family = Family::Lattice;
  std::vector<long long> params;
  std::uint64_t seed = 0;  // RandomGeneralPosition only
};

/// Deterministic constructor for the supported point families.  Families
/// documented pentagon-free self-check via find_empty_pentagon and throw
/// Errc::Internal on violation.
PointSet generate(const FamilySpec& spec);

PointSet lattice(int w, int h);
PointSet two_lines(int k, int m);
PointSet three_rays(int a, int b, int c);
PointSet two_wedges(int a, int b);
PointSet wedge_segment(int a, int b);
PointSet quad_segment(int b);
/// w x h lattice minus the hull-boundary points whose row-major indices are
/// set in mask.  Throws Errc::MaskNotOnHull if a masked point is interior.
PointSet lattice_hull_removed(int w, int h, std::uint64_t mask);
/// Rows (12i, 6), (3i, 3), (4i, 2), (6i, 0) for i = 0..m.
PointSet kara_rows(int m);
/// Strictly convex integer n-gon, counterclockwise from angle 0.
PointSet convex_ngon(int n);
/// n seeded random points with no collinear triple and no cocircular
/// quadruple; rejection sampling, reproducible.
PointSet random_general_position(int n, std::uint64_t seed);

/// Six points with no empty quadrilateral that are not covered by the
/// line-based unique-triangulation families.
PointSet dilation_free_six();

/// Subset of ps strictly inside or on the convex polygon given by its ccw
/// vertex list; preserves pentagon-freeness.
PointSet clip_to_convex(const PointSet& ps,
                        const std::vector<std::pair<Int, Int>>& polygon);

}  // namespace flipcube
