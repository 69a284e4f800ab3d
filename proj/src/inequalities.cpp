#include "polyadj/inequalities.hpp"

#include "polyadj/fan.hpp"

namespace polyadj {

namespace {

LemmaStep lemma_step(const LatticePolytope& p, const LatticePolytope& p1, int stage) {
  LemmaStep step;
  step.stage = stage;
  step.b = boundary_point_count(p);
  step.b1 = boundary_point_count(p1);
  step.bound = compare_le(Rational(step.b), Rational(step.b1 + 9));

  const ToricSurface minimal = minimalize(toric_surface(p));
  step.rho1 = minimal.rho;
  if (auto adjoint = adjoint_surface(minimal)) {
    step.b1_fan = -intersection_numbers(*adjoint).HK;
    step.adjoint_nef = adjoint->polytope == p1;
  }
  step.identity = step.b == step.b1 + 10 - *step.rho1;
  step.equality_iff_p2 = step.bound.equality == (*step.rho1 == 1);
  return step;
}

InductionReplay induction_replay(const Rational& l, const InvariantRecord& r, const InvariantRecord& r1) {
  const Rational b(r.b), b1(r1.b), s(r.s), s1(r1.s);
  const Rational two_l_minus_one = Rational(2) * l - 1;
  const Rational l1 = l - 1;
  InductionReplay out;
  out.lines = {
      two_l_minus_one * b,
      two_l_minus_one * b1 + Rational(9) * two_l_minus_one,
      Rational(2) * b1 + (Rational(2) * l1 - 1) * b1 + Rational(9) * two_l_minus_one,
      Rational(2) * b1 + Rational(2) * s1 + Rational(9) * l1 * l1 - 2 + Rational(9) * two_l_minus_one,
      Rational(2) * s + Rational(9) * l * l - 2,
  };
  out.first_le = out.lines[0] <= out.lines[1];
  out.second_eq = out.lines[1] == out.lines[2];
  out.third_le = out.lines[2] <= out.lines[3];
  out.fourth_eq = out.lines[3] == out.lines[4];
  return out;
}

}  // namespace

Comparison compare_le(Rational lhs, Rational rhs) {
  Comparison c{std::move(lhs), std::move(rhs)};
  c.holds = c.lhs <= c.rhs;
  c.equality = c.lhs == c.rhs;
  return c;
}

LemmaStep lemma_step_check(const LatticePolytope& p) {
  if (p.dim() < 2) throw std::invalid_argument("lemma_step_check: polytope is not 2-dimensional");
  const LatticePolytope p1 = interior_hull(p);
  if (p1.dim() != 2) throw NotApplicable("lemma_step_check: adjoint polytope is not 2-dimensional");
  return lemma_step(p, p1, 0);
}

InequalityReport check_all(const LatticePolytope& p) {
  InequalityReport rep;
  rep.chain = chain(p);
  rep.inv = rep.chain.records.front();
  rep.level = rep.chain.level;
  const Rational& l = rep.level;
  const Rational b(rep.inv.b), d(rep.inv.d), s(rep.inv.s);
  const Rational nine_l2 = Rational(9) * l * l;

  rep.scott.applicable = rep.inv.i >= 1;
  rep.scott.cmp = compare_le(b, Rational(2 * rep.inv.i + 7));
  rep.main_homog = compare_le(Rational(2) * l * b, d + nine_l2);
  rep.main_orig = compare_le((Rational(2) * l - 1) * b, Rational(2) * s + nine_l2 - 2);

  const auto& stages = rep.chain.polytopes;
  const auto& recs = rep.chain.records;
  for (std::size_t k = 0; k + 1 < stages.size(); ++k) {
    const int stage = static_cast<int>(k);
    const auto& r = recs[k];
    const auto& r1 = recs[k + 1];
    rep.onion_steps.push_back({stage, r.i, r1.i, r1.b, r.i == r1.i + r1.b});

    AreaDrop drop;
    drop.stage = stage;
    drop.two_dimensional = stages[k + 1].dim() == 2;
    drop.drop = r.a2 - r1.a2;
    drop.boundary_sum = r.b + r1.b;
    drop.identity = !drop.two_dimensional || drop.drop == drop.boundary_sum;
    drop.at_least_six = !drop.two_dimensional || drop.drop >= 6;
    rep.area_drops.push_back(std::move(drop));

    if (stages[k + 1].dim() == 2) rep.lemma_steps.push_back(lemma_step(stages[k], stages[k + 1], stage));
  }

  if (rep.chain.steps >= 1 && stages[1].dim() == 2) rep.induction = induction_replay(l, recs[0], recs[1]);

  rep.base_case.applicable = l >= Rational(1) && l < Rational(2);
  if (rep.base_case.applicable) {
    const ToricSurface t = toric_surface(p);
    rep.base_case.K2 = t.K2;
    if (auto adjoint = adjoint_surface(t)) {
      rep.base_case.adjoint_square = intersection_numbers(*adjoint).HH;
      rep.base_case.holds = t.K2 <= *rep.base_case.adjoint_square + 9;
    }
  }
  return rep;
}

}  // namespace polyadj
