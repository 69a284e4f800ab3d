#include "polyadj/fan.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyadj {

namespace {

std::size_t next(std::size_t k, std::size_t n) { return (k + 1) % n; }
std::size_t prev(std::size_t k, std::size_t n) { return (k + n - 1) % n; }

// Rotates the fan so that it starts at its smallest angle.
void rotate_to_first_angle(Fan& fan) {
  if (fan.rays.empty()) return;
  std::size_t first = 0;
  for (std::size_t k = 1; k < fan.rays.size(); ++k) {
    if (angle_less(fan.rays[k], fan.rays[first])) first = k;
  }
  std::rotate(fan.rays.begin(), fan.rays.begin() + static_cast<std::ptrdiff_t>(first), fan.rays.end());
  std::vector<bool> flags(fan.original.begin(), fan.original.end());
  std::rotate(flags.begin(), flags.begin() + static_cast<std::ptrdiff_t>(first), flags.end());
  fan.original = std::move(flags);
}

// Point where the support lines of two adjacent unimodular rays meet.
LatticePoint corner(const LatticeVector& u, const Integer& hu, const LatticeVector& w, const Integer& hw) {
  const Integer det = cross(u, w);
  if (det != 1) throw std::logic_error("corner: cone is not unimodular");
  return {hu * w.y - hw * u.y, u.x * hw - w.x * hu};
}

// Completes a ToricSurface from its smooth fan and support values. Returns
// nullopt if the support values do not define a nef divisor.
std::optional<ToricSurface> make_surface(Fan fan, std::vector<Integer> support, const LatticePolytope* expected) {
  ToricSurface t;
  t.self_intersection = self_intersections(fan);
  const std::size_t n = fan.size();
  t.rho = static_cast<int>(n) - 2;

  std::vector<Integer> k_coeffs(n, Integer(-1));
  t.K2 = divisor_pairing(fan, t.self_intersection, k_coeffs, k_coeffs);

  t.fan = std::move(fan);
  t.support = std::move(support);

  const auto degrees = polarization_degrees(t);
  if (std::any_of(degrees.begin(), degrees.end(), [](const Integer& d) { return d < 0; })) return std::nullopt;

  std::vector<LatticePoint> corners;
  corners.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = next(k, n);
    corners.push_back(corner(t.fan.rays[k], t.support[k], t.fan.rays[j], t.support[j]));
  }
  t.polytope = hull(corners);
  if (expected != nullptr && !(t.polytope == *expected)) {
    throw std::logic_error("toric_surface: support values do not reproduce " + compact_string(*expected));
  }

  // A ray of degree 0 meets the polytope in a single vertex, namely the
  // corner it shares with its successor.
  for (std::size_t k = 0; k < n; ++k) {
    if (degrees[k] == 0) ++t.mults[corners[k]];
  }
  return t;
}

}  // namespace

std::vector<Integer> cone_determinants(const Fan& fan) {
  const std::size_t n = fan.size();
  std::vector<Integer> dets;
  dets.reserve(n);
  for (std::size_t k = 0; k < n; ++k) dets.push_back(cross(fan.rays[k], fan.rays[next(k, n)]));
  return dets;
}

bool is_smooth(const Fan& fan) {
  const auto dets = cone_determinants(fan);
  return std::all_of(dets.begin(), dets.end(), [](const Integer& d) { return d == 1; });
}

Fan normal_fan(const LatticePolytope& p) {
  Fan fan;
  for (auto& e : edge_data(p)) {
    fan.rays.push_back(std::move(e.inner_normal));
    fan.original.push_back(true);
  }
  rotate_to_first_angle(fan);
  return fan;
}

Fan resolve(const Fan& fan) {
  Fan out;
  const std::size_t n = fan.size();
  for (std::size_t k = 0; k < n; ++k) {
    out.rays.push_back(fan.rays[k]);
    out.original.push_back(fan.original[k]);

    // Hirzebruch-Jung: with d = det(u, w) > 1, the next ray is
    // (w + c u) / d where c = -<s, w> mod d and <s, u> = 1.
    LatticeVector u = fan.rays[k];
    const LatticeVector w = fan.rays[next(k, n)];
    Integer d = cross(u, w);
    if (d <= 0) throw std::invalid_argument("resolve: fan is not complete and strictly convex");
    while (d > 1) {
      auto [g, sx, sy] = extended_gcd(u.x, u.y);
      const Integer c = mod_floor(-(sx * w.x + sy * w.y), d);
      LatticeVector v{(w.x + c * u.x) / d, (w.y + c * u.y) / d};
      out.rays.push_back(v);
      out.original.push_back(false);
      u = std::move(v);
      d = cross(u, w);
    }
  }
  // Rays inserted after the last cone may precede the old first ray.
  const auto first = static_cast<std::ptrdiff_t>(
      std::min_element(out.rays.begin(), out.rays.end(), angle_less) - out.rays.begin());
  std::rotate(out.rays.begin(), out.rays.begin() + first, out.rays.end());
  std::rotate(out.original.begin(), out.original.begin() + first, out.original.end());
  return out;
}

std::vector<Integer> self_intersections(const Fan& fan) {
  const std::size_t n = fan.size();
  std::vector<Integer> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& before = fan.rays[prev(k, n)];
    const auto& ray = fan.rays[k];
    const auto& after = fan.rays[next(k, n)];
    if (cross(before, ray) != 1 || cross(ray, after) != 1) {
      throw std::logic_error("self_intersections: fan is not smooth");
    }
    const Integer a = cross(before, after);
    if (!(before + after == a * ray)) throw std::logic_error("self_intersections: ray relation fails");
    out[k] = -a;
  }
  return out;
}

Integer divisor_pairing(const Fan& fan, std::span<const Integer> self_int, std::span<const Integer> lhs,
                        std::span<const Integer> rhs) {
  const std::size_t n = fan.size();
  Integer sum = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = next(k, n);
    sum += lhs[k] * rhs[k] * self_int[k];
    sum += lhs[k] * rhs[j] + lhs[j] * rhs[k];
  }
  return sum;
}

std::vector<Integer> polarization_degrees(const ToricSurface& t) {
  const std::size_t n = t.fan.size();
  std::vector<Integer> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    // H . D_k with H = sum(-h_j D_j)
    out[k] = -t.support[k] * t.self_intersection[k] - t.support[prev(k, n)] - t.support[next(k, n)];
  }
  return out;
}

ToricSurface toric_surface(const LatticePolytope& p) {
  Fan fan = resolve(normal_fan(p));
  std::vector<Integer> support;
  support.reserve(fan.size());
  for (const auto& u : fan.rays) {
    Integer best = dot(u, p.vertices()[0]);
    for (const auto& v : p.vertices()) best = std::min(best, dot(u, v));
    support.push_back(std::move(best));
  }
  auto t = make_surface(std::move(fan), std::move(support), &p);
  if (!t) throw std::logic_error("toric_surface: polarization is not nef for " + compact_string(p));
  return std::move(*t);
}

IntersectionNumbers intersection_numbers(const ToricSurface& t) {
  const std::size_t n = t.fan.size();
  std::vector<Integer> h(n), k(n, Integer(-1));
  for (std::size_t j = 0; j < n; ++j) h[j] = -t.support[j];
  return {divisor_pairing(t.fan, t.self_intersection, h, h), divisor_pairing(t.fan, t.self_intersection, h, k),
          divisor_pairing(t.fan, t.self_intersection, k, k)};
}

Integer v_parameter(const ToricSurface& t) {
  Integer sum = 0;
  for (const auto& [vertex, m] : t.mults) sum += m;
  return Integer(t.rho + 2) - sum;
}

std::vector<std::size_t> contractible_rays(const ToricSurface& t) {
  std::vector<std::size_t> out;
  if (t.fan.size() <= 3) return out;
  const auto degrees = polarization_degrees(t);
  for (std::size_t k = 0; k < t.fan.size(); ++k) {
    if (t.self_intersection[k] == -1 && degrees[k] == 0) out.push_back(k);
  }
  return out;
}

ToricSurface minimalize(const ToricSurface& t) {
  return minimalize(t, [](std::span<const std::size_t>) { return std::size_t{0}; });
}

ToricSurface minimalize(const ToricSurface& t,
                        const std::function<std::size_t(std::span<const std::size_t>)>& choose) {
  ToricSurface current = t;
  for (auto candidates = contractible_rays(current); !candidates.empty();
       candidates = contractible_rays(current)) {
    const std::size_t pick = candidates.at(choose(candidates));
    const auto offset = static_cast<std::ptrdiff_t>(pick);
    Fan fan = current.fan;
    fan.rays.erase(fan.rays.begin() + offset);
    fan.original.erase(fan.original.begin() + offset);
    std::vector<Integer> support = current.support;
    support.erase(support.begin() + offset);
    auto next_surface = make_surface(std::move(fan), std::move(support), &current.polytope);
    if (!next_surface) throw std::logic_error("minimalize: contraction broke nefness");
    current = std::move(*next_surface);
  }
  return current;
}

std::optional<ToricSurface> adjoint_surface(const ToricSurface& t) {
  std::vector<Integer> support = t.support;
  for (auto& h : support) h += 1;
  return make_surface(t.fan, std::move(support), nullptr);
}

}  // namespace polyadj
