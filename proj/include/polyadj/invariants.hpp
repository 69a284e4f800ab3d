#pragma once

#include <vector>

#include "polyadj/lattice.hpp"

namespace polyadj {

/// Lattice-polygon side of the toric dictionary.
///   a2 twice the area (= degree d), i interior points (= sectional genus s),
///   b boundary points (= -HK), n all lattice points, v vertices.
/// Segments and points have i = 0 (ambient interior), b = n.
struct InvariantRecord {
  Integer a2;
  Integer i;
  Integer b;
  Integer n;
  Integer v;
  Integer d;
  Integer s;

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

/// Throws std::logic_error if Pick's formula or d = n + s - 2 fails on a
/// polygon; that can only mean an arithmetic bug.
InvariantRecord invariants(const LatticePolytope& p);

Integer boundary_point_count(const LatticePolytope& p);

/// Lattice points strictly inside the polygon, counted row by row with the
/// lattice-scan kernels. Zero for dim < 2.
Integer interior_point_count(const LatticePolytope& p);

/// All lattice points of the polytope (closed), counted by the same scan.
Integer lattice_point_count(const LatticePolytope& p);

/// For each row containing interior lattice points, its leftmost and
/// rightmost interior point. The convex hull of these is the hull of all
/// interior lattice points. Empty for dim < 2.
std::vector<LatticePoint> interior_row_extremes(const LatticePolytope& p);

}  // namespace polyadj
