#pragma once

// Lattice points, unimodular maps, convex lattice polytopes of dimension
// at most two, and their edge data.

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "polyadj/integer.hpp"

namespace polyadj {

struct LatticePoint {
  Integer x;
  Integer y;

  LatticePoint() = default;
  LatticePoint(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}
  LatticePoint(std::int64_t x_, std::int64_t y_) : x(x_), y(y_) {}
  LatticePoint(int x_, int y_) : x(x_), y(y_) {}

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b);

  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend LatticePoint operator*(const Integer& k, const LatticePoint& a) {
    return {k * a.x, k * a.y};
  }
};

/// Integer vectors (rays, normals) share the point representation.
using LatticeVector = LatticePoint;

inline Integer dot(const LatticeVector& a, const LatticeVector& b) { return a.x * b.x + a.y * b.y; }
inline Integer cross(const LatticeVector& a, const LatticeVector& b) { return a.x * b.y - a.y * b.x; }

/// Orientation of (a, b, c): positive for a counter-clockwise turn.
inline Integer orient(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return cross(b - a, c - a);
}

/// gcd of the entries; zero only for the zero vector.
Integer content(const LatticeVector& v);
LatticeVector primitive(const LatticeVector& v);

/// Strict angular order on nonzero vectors, angles measured in [0, 2pi).
bool angle_less(const LatticeVector& a, const LatticeVector& b);

std::string to_string(const LatticePoint& p);

/// x -> m x + t with |det m| = 1.
class UnimodularMap {
 public:
  /// Identity.
  UnimodularMap();
  /// Row-major matrix {{a, b}, {c, d}}; throws std::invalid_argument unless |ad - bc| = 1.
  UnimodularMap(std::array<Integer, 4> matrix, LatticeVector translation);

  static UnimodularMap translation(LatticeVector t);

  const std::array<Integer, 4>& matrix() const { return m_; }
  const LatticeVector& shift() const { return t_; }
  Integer det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  LatticePoint operator()(const LatticePoint& p) const;
  /// (*this) after `inner`.
  UnimodularMap compose(const UnimodularMap& inner) const;
  UnimodularMap inverse() const;

 private:
  std::array<Integer, 4> m_;
  LatticeVector t_;
};

/// Convex lattice polytope in the plane. Vertices of a polygon are strictly
/// convex, counter-clockwise, and start at the lexicographically smallest
/// vertex. Only `hull` constructs non-empty values.
class LatticePolytope {
 public:
  /// Empty polytope (dim = -1).
  LatticePolytope() = default;

  int dim() const { return dim_; }
  bool empty() const { return dim_ < 0; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }
  /// Orders by dimension, then lexicographically by vertex tuple.
  friend std::strong_ordering operator<=>(const LatticePolytope& a, const LatticePolytope& b);

  friend LatticePolytope hull(std::span<const LatticePoint> points);

 private:
  std::vector<LatticePoint> vertices_;
  int dim_ = -1;
};

LatticePolytope hull(std::span<const LatticePoint> points);
inline LatticePolytope hull(std::initializer_list<LatticePoint> points) {
  return hull(std::span<const LatticePoint>(points.begin(), points.size()));
}

LatticePolytope apply(const UnimodularMap& map, const LatticePolytope& p);
LatticePolytope translate(const LatticePolytope& p, const LatticeVector& t);
/// k * P for k >= 0.
LatticePolytope dilate(const LatticePolytope& p, const Integer& k);

/// Distinguished representative of the affine unimodular orbit of p.
LatticePolytope canonical_form(const LatticePolytope& p);

/// Lattice length of a segment polytope, 0 for points and empty.
Integer lattice_length(const LatticePolytope& p);

/// Twice the area (shoelace); zero for dim < 2.
Integer twice_area(const LatticePolytope& p);

struct EdgeDatum {
  LatticeVector inner_normal;  // primitive
  Integer support;             // edge on <n, x> = support, P on <n, x> >= support
  Integer lattice_length;
};

/// One datum per edge, edge k running from vertex k to vertex k+1.
/// Throws std::invalid_argument for dim < 2.
std::vector<EdgeDatum> edge_data(const LatticePolytope& p);

/// "x y;x y;..." in vertex order; "" for empty.
std::string compact_string(const LatticePolytope& p);

}  // namespace polyadj
