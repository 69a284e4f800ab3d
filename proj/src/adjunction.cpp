#include "polyadj/adjunction.hpp"

#include "polyadj/fan.hpp"
#include "polyadj/lp.hpp"

namespace polyadj {

LatticePolytope interior_hull(const LatticePolytope& p) {
  const auto extremes = interior_row_extremes(p);
  return hull(extremes);
}

Rational max_inset(std::span<const LatticeVector> normals, std::span<const Integer> support) {
  // Primal: max t  s.t.  <u_k, x> - t >= h_k.
  // Dual:   min sum(-h_k l_k)  s.t.  sum(l_k u_k) = 0, sum(l_k) = 1, l >= 0.
  const std::size_t m = normals.size();
  std::vector<Rational> cost(m);
  std::vector<std::vector<Rational>> a(3, std::vector<Rational>(m));
  for (std::size_t k = 0; k < m; ++k) {
    cost[k] = Rational(-support[k]);
    a[0][k] = Rational(normals[k].x);
    a[1][k] = Rational(normals[k].y);
    a[2][k] = 1;
  }
  return lp::minimize(cost, a, {Rational(0), Rational(0), Rational(1)}).value;
}

Rational level(const LatticePolytope& p) {
  if (p.empty()) throw std::invalid_argument("level: empty polytope");
  if (p.dim() < 2) return 0;
  const Fan fan = resolve(normal_fan(p));
  std::vector<Integer> support;
  support.reserve(fan.size());
  for (const auto& u : fan.rays) {
    Integer best = dot(u, p.vertices()[0]);
    for (const auto& v : p.vertices()) best = std::min(best, dot(u, v));
    support.push_back(std::move(best));
  }
  return max_inset(fan.rays, support);
}

Rational facet_level(const LatticePolytope& p) {
  if (p.empty()) throw std::invalid_argument("facet_level: empty polytope");
  if (p.dim() < 2) return 0;
  std::vector<LatticeVector> normals;
  std::vector<Integer> support;
  for (auto& e : edge_data(p)) {
    normals.push_back(std::move(e.inner_normal));
    support.push_back(std::move(e.support));
  }
  return max_inset(normals, support);
}

std::string to_string(Endgame e) {
  switch (e) {
    case Endgame::fractional_big:
      return "FRACTIONAL_BIG";
    case Endgame::point:
      return "POINT";
    case Endgame::pencil:
      return "PENCIL";
  }
  return "UNKNOWN";
}

EndgameCase classify_endgame(const AdjunctionChain& c) {
  if (c.polytopes.empty()) throw ClassificationError("classify_endgame: empty chain");
  const LatticePolytope& last = c.polytopes.back();
  const std::string where = " (start " + compact_string(c.polytopes.front()) + ", level " + c.level.str() + ")";
  switch (last.dim()) {
    case 2: {
      if (c.records.back().i != 0) throw ClassificationError("final stage has interior points" + where);
      if (c.level.is_integer()) throw ClassificationError("integral level ending in a polygon" + where);
      const bool half = (c.level * Rational(2)).is_integer();
      const bool third = (c.level * Rational(3)).is_integer();
      if (!half && !third) throw ClassificationError("neither 2l nor 3l is integral" + where);
      return {Endgame::fractional_big, 0};
    }
    case 1:
      if (!c.level.is_integer()) throw ClassificationError("fractional level ending in a segment" + where);
      return {Endgame::pencil, lattice_length(last)};
    case 0:
      if (!c.level.is_integer()) throw ClassificationError("fractional level ending in a point" + where);
      return {Endgame::point, 0};
    default:
      throw ClassificationError("chain ends in the empty polytope" + where);
  }
}

AdjunctionChain chain(const LatticePolytope& p) {
  if (p.dim() < 2) throw std::invalid_argument("chain: polytope is not 2-dimensional");
  AdjunctionChain c;
  c.polytopes.push_back(p);
  c.records.push_back(invariants(p));
  c.stage_levels.push_back(level(p));
  while (c.records.back().i > 0) {
    LatticePolytope next = interior_hull(c.polytopes.back());
    c.records.push_back(invariants(next));
    c.stage_levels.push_back(level(next));
    c.polytopes.push_back(std::move(next));
  }
  c.steps = static_cast<int>(c.polytopes.size()) - 1;
  c.level = c.stage_levels.front();
  c.endgame = classify_endgame(c);
  return c;
}

}  // namespace polyadj
