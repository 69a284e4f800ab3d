#pragma once

// Evaluation of the level inequality 2lb <= d + 9l^2 (and its genus form),
// Scott's bound, the one-step bound b <= b1 + 9, and the identities along an
// adjunction chain. Every comparison is exact.

#include <optional>
#include <stdexcept>
#include <vector>

#include "polyadj/adjunction.hpp"
#include "polyadj/invariants.hpp"

namespace polyadj {

struct Comparison {
  Rational lhs;
  Rational rhs;
  bool holds = false;     // lhs <= rhs
  bool equality = false;  // lhs == rhs
};

Comparison compare_le(Rational lhs, Rational rhs);

/// b <= 2i + 7, only meaningful for i >= 1.
struct ScottCheck {
  bool applicable = false;
  Comparison cmp;
};

/// One adjunction step P -> P^(1) with 2-dimensional P^(1).
struct LemmaStep {
  int stage = 0;  // index k of the step P^(k) -> P^(k+1)
  Integer b;
  Integer b1;
  Comparison bound;  // b <= b1 + 9
  std::optional<int> rho1;     // Picard rank after minimalization
  std::optional<Integer> b1_fan;  // -H1.K1 on the minimalized surface
  bool adjoint_nef = false;       // H + K nef and its polytope is P^(1)
  bool identity = false;          // b == b1 + 10 - rho1
  bool equality_iff_p2 = false;   // (b == b1 + 9) <=> (rho1 == 1)
};

/// Thrown by lemma_step_check when P^(1) is not 2-dimensional.
struct NotApplicable : std::domain_error {
  using std::domain_error::domain_error;
};

/// i(P) = i(P1) + b(P1).
struct OnionStep {
  int stage = 0;
  Integer i;
  Integer i1;
  Integer b1;
  bool holds = false;
};

/// a2(P) - a2(P1) = b + b1, and >= 6 when P1 is 2-dimensional.
struct AreaDrop {
  int stage = 0;
  Integer drop;
  Integer boundary_sum;
  bool two_dimensional = false;
  bool identity = false;
  bool at_least_six = false;
};

/// The chain of (in)equalities of the induction step, with l the level of
/// P, b1 and s1 taken from P^(1):
///   (2l-1)b <= (2l-1)b1 + 9(2l-1)
///            = 2b1 + (2(l-1)-1)b1 + 9(2l-1)
///           <= 2b1 + 2s1 + 9(l-1)^2 - 2 + 9(2l-1)
///            = 2s + 9l^2 - 2
struct InductionReplay {
  std::vector<Rational> lines;  // five values, left to right
  bool first_le = false;
  bool second_eq = false;
  bool third_le = false;
  bool fourth_eq = false;
  bool holds() const { return first_le && second_eq && third_le && fourth_eq; }
};

/// K^2 <= (H+K)^2 + 9 for 1 <= l < 2, (H+K)^2 from the fan.
struct BaseCase {
  bool applicable = false;
  Integer K2;
  std::optional<Integer> adjoint_square;
  bool holds = false;
};

struct InequalityReport {
  AdjunctionChain chain;
  InvariantRecord inv;
  Rational level;
  ScottCheck scott;
  Comparison main_homog;  // 2lb <= d + 9l^2
  Comparison main_orig;   // (2l-1)b <= 2s + 9l^2 - 2
  std::vector<LemmaStep> lemma_steps;
  std::vector<OnionStep> onion_steps;
  std::vector<AreaDrop> area_drops;
  std::optional<InductionReplay> induction;
  BaseCase base_case;

  bool forms_agree() const { return main_homog.holds == main_orig.holds; }
};

/// Requires dim(P) = 2.
InequalityReport check_all(const LatticePolytope& p);

/// Throws NotApplicable unless the interior hull of P is 2-dimensional.
LemmaStep lemma_step_check(const LatticePolytope& p);

}  // namespace polyadj
