#pragma once

// Brute-force reference computations. Deliberately naive and independent of
// the library algorithms they are compared against.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "polyadj/fan.hpp"
#include "polyadj/integer.hpp"
#include "polyadj/lattice.hpp"

namespace oracle {

using polyadj::Integer;
using polyadj::LatticePoint;
using polyadj::LatticePolytope;
using polyadj::Rational;

struct Counts {
  Integer interior = 0;
  Integer boundary = 0;
  Integer total = 0;
};

// Classifies every point of the bounding box by orientation against each
// edge of a counter-clockwise polygon.
inline Counts point_counts(const LatticePolytope& p) {
  Counts c;
  const auto& vs = p.vertices();
  if (vs.empty()) return c;
  if (p.dim() < 2) {
    const Integer n = p.dim() == 0 ? Integer(1) : polyadj::gcd(vs[1].x - vs[0].x, vs[1].y - vs[0].y) + 1;
    c.boundary = n;
    c.total = n;
    return c;
  }
  Integer x0 = vs[0].x, x1 = vs[0].x, y0 = vs[0].y, y1 = vs[0].y;
  for (const auto& v : vs) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  for (Integer x = x0; x <= x1; ++x) {
    for (Integer y = y0; y <= y1; ++y) {
      bool inside = true, on_edge = false;
      for (std::size_t k = 0; k < vs.size(); ++k) {
        const auto& a = vs[k];
        const auto& b = vs[(k + 1) % vs.size()];
        const Integer o = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x);
        if (o < 0) inside = false;
        if (o == 0) on_edge = true;
      }
      if (!inside) continue;
      ++c.total;
      if (on_edge) {
        ++c.boundary;
      } else {
        ++c.interior;
      }
    }
  }
  return c;
}

inline std::vector<LatticePoint> interior_points(const LatticePolytope& p) {
  std::vector<LatticePoint> out;
  if (p.dim() < 2) return out;
  const auto& vs = p.vertices();
  Integer x0 = vs[0].x, x1 = vs[0].x, y0 = vs[0].y, y1 = vs[0].y;
  for (const auto& v : vs) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  for (Integer x = x0; x <= x1; ++x) {
    for (Integer y = y0; y <= y1; ++y) {
      bool strict = true;
      for (std::size_t k = 0; k < vs.size() && strict; ++k) {
        const auto& a = vs[k];
        const auto& b = vs[(k + 1) % vs.size()];
        strict = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x) > 0;
      }
      if (strict) out.emplace_back(x, y);
    }
  }
  return out;
}

// Solves a 3x3 system by Cramer's rule; nullopt when singular.
inline std::optional<std::array<Rational, 3>> solve3(const std::array<std::array<Integer, 3>, 3>& m,
                                                     const std::array<Integer, 3>& rhs) {
  auto det = [](const std::array<std::array<Integer, 3>, 3>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  const Integer d = det(m);
  if (d == 0) return std::nullopt;
  std::array<Rational, 3> out;
  for (int col = 0; col < 3; ++col) {
    auto mc = m;
    for (int row = 0; row < 3; ++row) mc[row][col] = rhs[row];
    out[col] = Rational(det(mc), d);
  }
  return out;
}

// max t such that <u_k, x> >= h_k + t for all k is feasible, by enumerating
// every basic solution of three tight constraints in (x, y, t).
inline Rational max_inset(const std::vector<LatticePoint>& normals, const std::vector<Integer>& support) {
  const std::size_t m = normals.size();
  std::optional<Rational> best;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        std::array<std::array<Integer, 3>, 3> sys;
        std::array<Integer, 3> rhs;
        const std::array<std::size_t, 3> idx{a, b, c};
        for (int r = 0; r < 3; ++r) {
          sys[r] = {normals[idx[r]].x, normals[idx[r]].y, Integer(-1)};
          rhs[r] = support[idx[r]];
        }
        const auto sol = solve3(sys, rhs);
        if (!sol) continue;
        const auto& [x, y, t] = *sol;
        bool feasible = true;
        for (std::size_t k = 0; k < m && feasible; ++k) {
          feasible = Rational(normals[k].x) * x + Rational(normals[k].y) * y - t >= Rational(support[k]);
        }
        if (feasible && (!best || t > *best)) best = t;
      }
    }
  }
  return best.value_or(Rational(0));
}

// Rays inserted into the cone (u, w) by the minimal resolution: the lattice
// points on the bounded boundary of conv(cone lattice points minus 0),
// strictly between u and w. Gift wrapping over the fundamental
// parallelogram, which contains that boundary.
inline std::vector<LatticePoint> cone_resolution_rays(const LatticePoint& u, const LatticePoint& w) {
  const Integer d = polyadj::cross(u, w);
  std::vector<LatticePoint> candidates;
  Integer x0 = std::min({Integer(0), u.x, w.x, Integer(u.x + w.x)}), x1 = std::max({Integer(0), u.x, w.x, Integer(u.x + w.x)});
  Integer y0 = std::min({Integer(0), u.y, w.y, Integer(u.y + w.y)}), y1 = std::max({Integer(0), u.y, w.y, Integer(u.y + w.y)});
  for (Integer x = x0; x <= x1; ++x) {
    for (Integer y = y0; y <= y1; ++y) {
      const LatticePoint p(x, y);
      if (x == 0 && y == 0) continue;
      // p = a u + b w with 0 <= a, b <= 1  <=>  0 <= cross(p, w) <= d, 0 <= cross(u, p) <= d
      const Integer a = polyadj::cross(p, w), b = polyadj::cross(u, p);
      if (a >= 0 && a <= d && b >= 0 && b <= d) candidates.push_back(p);
    }
  }
  std::vector<LatticePoint> out;
  LatticePoint cur = u;
  while (!(cur == w)) {
    std::optional<LatticePoint> next;
    for (const auto& q : candidates) {
      if (polyadj::cross(cur, q) <= 0) continue;
      if (!next) {
        next = q;
        continue;
      }
      const Integer o = polyadj::orient(cur, *next, q);
      const auto len = [&](const LatticePoint& r) { return (r.x - cur.x) * (r.x - cur.x) + (r.y - cur.y) * (r.y - cur.y); };
      if (o > 0 || (o == 0 && len(q) < len(*next))) next = q;
    }
    cur = *next;
    if (!(cur == w)) out.push_back(cur);
  }
  return out;
}

inline std::vector<LatticePoint> resolved_rays(const polyadj::Fan& fan) {
  std::vector<LatticePoint> out;
  for (std::size_t k = 0; k < fan.size(); ++k) {
    out.push_back(fan.rays[k]);
    for (const auto& r : cone_resolution_rays(fan.rays[k], fan.rays[(k + 1) % fan.size()])) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), polyadj::angle_less);
  return out;
}

// Affine unimodular equivalence by trying every anchored vertex
// correspondence; independent of canonical_form.
inline bool equivalent(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim() != q.dim() || p.num_vertices() != q.num_vertices()) return false;
  if (p.dim() < 2) {
    if (p.dim() <= 0) return true;
    return polyadj::lattice_length(p) == polyadj::lattice_length(q);
  }
  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  const std::size_t n = pv.size();
  const LatticePoint e1 = pv[1] - pv[0], e2 = pv[n - 1] - pv[0];
  const Integer det_e = polyadj::cross(e1, e2);
  for (std::size_t j = 0; j < n; ++j) {
    for (int dir : {1, -1}) {
      const LatticePoint f1 = qv[(j + n + dir) % n] - qv[j];
      const LatticePoint f2 = qv[(j + n - dir) % n] - qv[j];
      // M e1 = f1, M e2 = f2  =>  M = F E^{-1}
      const Integer a_num = f1.x * e2.y - f2.x * e1.y, b_num = -f1.x * e2.x + f2.x * e1.x;
      const Integer c_num = f1.y * e2.y - f2.y * e1.y, d_num = -f1.y * e2.x + f2.y * e1.x;
      if (a_num % det_e != 0 || b_num % det_e != 0 || c_num % det_e != 0 || d_num % det_e != 0) continue;
      const Integer a = a_num / det_e, b = b_num / det_e, c = c_num / det_e, d = d_num / det_e;
      if (polyadj::abs(a * d - b * c) != 1) continue;
      std::set<LatticePoint> image;
      for (const auto& v : pv) {
        const LatticePoint r = v - pv[0];
        image.insert(LatticePoint(a * r.x + b * r.y + qv[j].x, c * r.x + d * r.y + qv[j].y));
      }
      if (image == std::set<LatticePoint>(qv.begin(), qv.end())) return true;
    }
  }
  return false;
}

// One representative per equivalence class of 2-dimensional polygons with
// vertices in [0, n]^2, from every subset of grid points.
inline std::vector<LatticePolytope> box_classes_by_subsets(int n) {
  std::vector<LatticePoint> grid;
  for (int x = 0; x <= n; ++x) {
    for (int y = 0; y <= n; ++y) grid.emplace_back(x, y);
  }
  std::set<LatticePolytope> hulls;
  const std::size_t g = grid.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
    std::vector<LatticePoint> pts;
    for (std::size_t k = 0; k < g; ++k) {
      if (mask >> k & 1) pts.push_back(grid[k]);
    }
    if (pts.size() < 3) continue;
    auto h = polyadj::hull(pts);
    if (h.dim() == 2) hulls.insert(std::move(h));
  }
  std::vector<LatticePolytope> reps;
  for (const auto& h : hulls) {
    const bool known = std::any_of(reps.begin(), reps.end(), [&](const LatticePolytope& r) { return equivalent(r, h); });
    if (!known) reps.push_back(h);
  }
  return reps;
}

// Product of random elementary matrices (and an optional sign flip) with a
// random translation.
inline polyadj::UnimodularMap random_map(std::mt19937_64& rng, int steps = 6, int shear = 3, int shift = 20) {
  std::array<Integer, 4> m{1, 0, 0, 1};
  std::uniform_int_distribution<int> kind(0, 2), coef(-shear, shear), off(-shift, shift);
  for (int s = 0; s < steps; ++s) {
    const int k = coef(rng);
    switch (kind(rng)) {
      case 0:  // row0 += k row1
        m[0] += k * m[2];
        m[1] += k * m[3];
        break;
      case 1:  // row1 += k row0
        m[2] += k * m[0];
        m[3] += k * m[1];
        break;
      default:  // swap rows
        std::swap(m[0], m[2]);
        std::swap(m[1], m[3]);
        break;
    }
  }
  if (rng() & 1) {
    m[0] = -m[0];
    m[1] = -m[1];
  }
  return polyadj::UnimodularMap(m, LatticePoint(off(rng), off(rng)));
}

}  // namespace oracle
