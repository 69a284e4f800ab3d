#pragma once

// Adjunction on polarized toric surfaces, realized on lattice polygons:
// the adjoint polygon is the hull of the interior lattice points and the
// level is the largest lattice distance by which all supporting half-planes
// of the resolved normal fan can be moved inward.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyadj/integer.hpp"
#include "polyadj/invariants.hpp"
#include "polyadj/lattice.hpp"

namespace polyadj {

/// Convex hull of the interior lattice points (Empty if there are none).
LatticePolytope interior_hull(const LatticePolytope& p);

/// max t such that { x : <u_k, x> >= h_k + t for all k } is non-empty, for a
/// complete set of normals u_k. Solved exactly on the dual LP.
Rational max_inset(std::span<const LatticeVector> normals, std::span<const Integer> support);

/// Level over the rays of the resolved normal fan. Points and segments have
/// level 0; Empty throws std::invalid_argument.
Rational level(const LatticePolytope& p);

/// The same LP over the facet normals only; an upper bound for level().
Rational facet_level(const LatticePolytope& p);

enum class Endgame { fractional_big, point, pencil };

std::string to_string(Endgame e);

struct EndgameCase {
  Endgame tag = Endgame::fractional_big;
  Integer k = 0;  // lattice length, pencil only

  friend bool operator==(const EndgameCase&, const EndgameCase&) = default;
};

/// A chain whose end does not fit the trichotomy.
struct ClassificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AdjunctionChain {
  std::vector<LatticePolytope> polytopes;  // P, P^(1), ..., P^(steps)
  std::vector<InvariantRecord> records;    // one per polytope
  std::vector<Rational> stage_levels;      // level of each polytope
  int steps = 0;
  Rational level;
  EndgameCase endgame;

  /// steps == floor(level)
  bool steps_match_level() const { return Integer(steps) == level.floor(); }
};

/// Requires dim(P) = 2 (std::invalid_argument otherwise). Throws
/// ClassificationError when the endgame is not one of the three cases.
AdjunctionChain chain(const LatticePolytope& p);

/// Classifies the final stage of a computed chain; throws ClassificationError.
EndgameCase classify_endgame(const AdjunctionChain& c);

}  // namespace polyadj
