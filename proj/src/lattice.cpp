#include "polyadj/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyadj {

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
  if (a.x < b.x) return std::strong_ordering::less;
  if (a.x > b.x) return std::strong_ordering::greater;
  if (a.y < b.y) return std::strong_ordering::less;
  if (a.y > b.y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer content(const LatticeVector& v) { return gcd(v.x, v.y); }

LatticeVector primitive(const LatticeVector& v) {
  const Integer g = content(v);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  return {v.x / g, v.y / g};
}

namespace {

int half_plane(const LatticeVector& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }

}  // namespace

bool angle_less(const LatticeVector& a, const LatticeVector& b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

std::string to_string(const LatticePoint& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }

// ---------------------------------------------------------------------------
// UnimodularMap

UnimodularMap::UnimodularMap() : m_{1, 0, 0, 1}, t_{0, 0} {}

UnimodularMap::UnimodularMap(std::array<Integer, 4> matrix, LatticeVector translation)
    : m_(std::move(matrix)), t_(std::move(translation)) {
  const Integer d = det();
  if (d != 1 && d != -1) throw std::invalid_argument("UnimodularMap: |det| != 1");
}

UnimodularMap UnimodularMap::translation(LatticeVector t) { return UnimodularMap({1, 0, 0, 1}, std::move(t)); }

LatticePoint UnimodularMap::operator()(const LatticePoint& p) const {
  return {m_[0] * p.x + m_[1] * p.y + t_.x, m_[2] * p.x + m_[3] * p.y + t_.y};
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& inner) const {
  const auto& a = m_;
  const auto& b = inner.m_;
  std::array<Integer, 4> m{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                           a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  LatticeVector t{a[0] * inner.t_.x + a[1] * inner.t_.y + t_.x,
                  a[2] * inner.t_.x + a[3] * inner.t_.y + t_.y};
  return UnimodularMap(std::move(m), std::move(t));
}

UnimodularMap UnimodularMap::inverse() const {
  const Integer d = det();
  std::array<Integer, 4> m{d * m_[3], -d * m_[1], -d * m_[2], d * m_[0]};
  LatticeVector t{-(m[0] * t_.x + m[1] * t_.y), -(m[2] * t_.x + m[3] * t_.y)};
  return UnimodularMap(std::move(m), std::move(t));
}

// ---------------------------------------------------------------------------
// LatticePolytope

std::strong_ordering operator<=>(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

LatticePolytope hull(std::span<const LatticePoint> points) {
  LatticePolytope result;
  if (points.empty()) return result;

  std::vector<LatticePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  if (pts.size() == 1) {
    result.vertices_ = std::move(pts);
    result.dim_ = 0;
    return result;
  }

  // Andrew's monotone chain; collinear points are dropped so the vertices
  // are strictly convex. The lower chain starts at the lexicographic minimum
  // and proceeds counter-clockwise.
  std::vector<LatticePoint> chain(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(chain[k - 2], chain[k - 1], p) <= 0) --k;
    chain[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && orient(chain[k - 2], chain[k - 1], pts[i]) <= 0) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k - 1);

  if (chain.size() <= 2) {
    result.vertices_ = {pts.front(), pts.back()};
    result.dim_ = 1;
  } else {
    result.vertices_ = std::move(chain);
    result.dim_ = 2;
  }
  return result;
}

namespace {

// Rotates a cyclic vertex list (optionally reversing it first) so that it
// starts at its lexicographic minimum.
std::vector<LatticePoint> normalize_cycle(std::vector<LatticePoint> cycle, bool reverse) {
  if (reverse) std::reverse(cycle.begin(), cycle.end());
  auto first = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), first, cycle.end());
  return cycle;
}

}  // namespace

LatticePolytope apply(const UnimodularMap& map, const LatticePolytope& p) {
  std::vector<LatticePoint> image;
  image.reserve(p.num_vertices());
  for (const auto& v : p.vertices()) image.push_back(map(v));
  return hull(image);
}

LatticePolytope translate(const LatticePolytope& p, const LatticeVector& t) {
  return apply(UnimodularMap::translation(t), p);
}

LatticePolytope dilate(const LatticePolytope& p, const Integer& k) {
  if (k < 0) throw std::invalid_argument("dilate: negative factor");
  std::vector<LatticePoint> image;
  for (const auto& v : p.vertices()) image.push_back(k * v);
  return hull(image);
}

LatticePolytope canonical_form(const LatticePolytope& p) {
  switch (p.dim()) {
    case -1:
      return p;
    case 0:
      return hull({LatticePoint(0, 0)});
    case 1:
      return hull({LatticePoint(0, 0), LatticePoint(lattice_length(p), Integer(0))});
    default:
      break;
  }

  const auto& vs = p.vertices();
  const std::size_t n = vs.size();
  std::vector<LatticePoint> best;
  std::vector<LatticePoint> image(n);

  for (std::size_t j = 0; j < n; ++j) {
    for (int dir : {+1, -1}) {
      const LatticePoint& src = vs[j];
      const LatticePoint& dst = vs[(j + n + dir) % n];
      const LatticePoint& other = vs[(j + n - dir) % n];

      // B sends the primitive edge direction e to (1,0): rows (a, b) and
      // (-e.y, e.x) with a e.x + b e.y = 1.
      const LatticeVector e = primitive(dst - src);
      auto [g, a, b] = extended_gcd(e.x, e.y);
      std::array<Integer, 4> m{a, b, -e.y, e.x};
      if (dir < 0) {  // reflect y -> -y so the polygon lies above the x-axis
        m[2] = -m[2];
        m[3] = -m[3];
      }
      // Residual shear (x, y) -> (x + k y, y): bring the other neighbor of
      // the source vertex into 0 <= x < y.
      const LatticeVector w = other - src;
      const Integer wx = m[0] * w.x + m[1] * w.y;
      const Integer wy = m[2] * w.x + m[3] * w.y;
      const Integer k = -floor_div(wx, wy);
      m[0] += k * m[2];
      m[1] += k * m[3];

      for (std::size_t i = 0; i < n; ++i) {
        const LatticeVector d = vs[i] - src;
        image[i] = LatticePoint(m[0] * d.x + m[1] * d.y, m[2] * d.x + m[3] * d.y);
      }
      auto candidate = normalize_cycle(image, dir < 0);
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }
  return hull(best);
}

Integer lattice_length(const LatticePolytope& p) {
  if (p.dim() != 1) return 0;
  return content(p.vertices()[1] - p.vertices()[0]);
}

Integer twice_area(const LatticePolytope& p) {
  if (p.dim() < 2) return 0;
  const auto& vs = p.vertices();
  Integer sum = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) sum += cross(vs[i], vs[(i + 1) % vs.size()]);
  return sum;
}

std::vector<EdgeDatum> edge_data(const LatticePolytope& p) {
  if (p.dim() < 2) throw std::invalid_argument("edge_data: polytope is not 2-dimensional");
  const auto& vs = p.vertices();
  const std::size_t n = vs.size();
  std::vector<EdgeDatum> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const LatticeVector e = vs[(i + 1) % n] - vs[i];
    const Integer g = content(e);
    LatticeVector normal{-e.y / g, e.x / g};  // left of a ccw edge is inside
    Integer support = dot(normal, vs[i]);
    edges.push_back({std::move(normal), std::move(support), g});
  }
  return edges;
}

std::string compact_string(const LatticePolytope& p) {
  std::string out;
  for (const auto& v : p.vertices()) {
    if (!out.empty()) out += ';';
    out += v.x.str() + ' ' + v.y.str();
  }
  return out;
}

}  // namespace polyadj
