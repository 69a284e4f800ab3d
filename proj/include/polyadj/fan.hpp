#pragma once

// Complete fans in the plane and smooth projective toric surfaces polarized
// by a lattice polytope. Divisors are written in the basis of torus-invariant
// prime divisors D_k, one per ray u_k; the intersection form is
//   D_k . D_{k+1} = 1,  D_k^2 = -a_k  where u_{k-1} + u_{k+1} = a_k u_k,
// and zero for non-adjacent rays. H = sum(-h_k D_k), K = -sum(D_k).

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "polyadj/lattice.hpp"

namespace polyadj {

struct Fan {
  /// Primitive, pairwise non-parallel, strictly increasing in angle starting
  /// from the smallest angle in [0, 2pi).
  std::vector<LatticeVector> rays;
  /// true for facet normals of the polytope, false for rays added by resolve.
  std::vector<bool> original;

  std::size_t size() const { return rays.size(); }
  friend bool operator==(const Fan&, const Fan&) = default;
};

/// Determinant of every two-dimensional cone (u_k, u_{k+1}).
std::vector<Integer> cone_determinants(const Fan& fan);
bool is_smooth(const Fan& fan);

/// Inner edge normals of a polygon. Throws std::invalid_argument for dim < 2.
Fan normal_fan(const LatticePolytope& p);

/// Minimal smooth refinement (Hirzebruch-Jung). Smooth fans are returned
/// unchanged.
Fan resolve(const Fan& fan);

struct ToricSurface {
  Fan fan;                                // smooth
  std::vector<Integer> support;           // h(u_k) = min over the polytope of <u_k, x>
  std::vector<Integer> self_intersection; // D_k^2
  int rho = 0;                            // Picard rank, #rays - 2
  Integer K2;
  /// Singular vertex of the polytope -> number of exceptional curves over it,
  /// i.e. rays whose face of the polytope is that single vertex.
  std::map<LatticePoint, int> mults;
  LatticePolytope polytope;
};

/// Minimal resolution of X_P together with the polarization. dim(P) = 2.
ToricSurface toric_surface(const LatticePolytope& p);

/// Self-intersections of a smooth complete fan; throws std::logic_error if
/// the ray relation u_{k-1} + u_{k+1} = a_k u_k fails.
std::vector<Integer> self_intersections(const Fan& fan);

/// D . D' for divisors given by coefficients in the D_k basis.
Integer divisor_pairing(const Fan& fan, std::span<const Integer> self_int, std::span<const Integer> lhs,
                        std::span<const Integer> rhs);

/// H . D_k for each ray; for a nef polarization these are the edge lengths.
std::vector<Integer> polarization_degrees(const ToricSurface& t);

struct IntersectionNumbers {
  Integer HH;
  Integer HK;
  Integer KK;
  friend bool operator==(const IntersectionNumbers&, const IntersectionNumbers&) = default;
};

IntersectionNumbers intersection_numbers(const ToricSurface& t);

/// rho + 2 - sum of multiplicities.
Integer v_parameter(const ToricSurface& t);

/// Rays that minimalize may contract: D^2 = -1 and H . D = 0.
std::vector<std::size_t> contractible_rays(const ToricSurface& t);

/// Contracts H-orthogonal (-1)-curves until none is left. The chooser picks
/// which candidate to contract next (index into the candidate list); the
/// default contracts the first.
ToricSurface minimalize(const ToricSurface& t);
ToricSurface minimalize(const ToricSurface& t,
                        const std::function<std::size_t(std::span<const std::size_t>)>& choose);

/// The pair (S, H + K) on the same fan, i.e. support values h + 1. Returns
/// nullopt when H + K is not nef (some (H + K) . D_k < 0), which includes
/// the case that H + K is not effective.
std::optional<ToricSurface> adjoint_surface(const ToricSurface& t);

}  // namespace polyadj
