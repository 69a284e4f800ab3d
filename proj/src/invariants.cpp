#include "polyadj/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyadj/kernels.hpp"

namespace polyadj {

namespace {

// Above this many bounding-box points the per-point kernel scan is replaced
// by exact per-row interval arithmetic.
constexpr std::int64_t kPointScanLimit = std::int64_t{1} << 22;
// Above this many rows counting falls back to Pick's formula.
constexpr std::int64_t kRowLimit = std::int64_t{1} << 24;

struct Box {
  Integer xmin, xmax, ymin, ymax;
};

Box bounding_box(const LatticePolytope& p) {
  Box box{p.vertices()[0].x, p.vertices()[0].x, p.vertices()[0].y, p.vertices()[0].y};
  for (const auto& v : p.vertices()) {
    box.xmin = std::min(box.xmin, v.x);
    box.xmax = std::max(box.xmax, v.x);
    box.ymin = std::min(box.ymin, v.y);
    box.ymax = std::max(box.ymax, v.y);
  }
  return box;
}

struct RowResult {
  Integer count;
  Integer first;
  Integer last;
};

// Scans every row of the bounding box for points x with
// <n_k, x> >= support_k + threshold for all edges k.
class RowScanner {
 public:
  RowScanner(const LatticePolytope& p, int threshold) : edges_(edge_data(p)), box_(bounding_box(p)), threshold_(threshold) {
    const Integer width = box_.xmax - box_.xmin + 1;
    const Integer height = box_.ymax - box_.ymin + 1;
    rows_ok_ = height <= kRowLimit;
    use_kernel_ = width * height <= kPointScanLimit && fits_kernel();
    if (use_kernel_) {
      for (const auto& e : edges_) coef_.push_back(e.inner_normal.x.convert_to<std::int32_t>());
      offset_.resize(edges_.size());
    }
  }

  bool feasible() const { return rows_ok_; }

  template <typename Fn>
  void for_each_row(Fn&& fn) {
    for (Integer y = box_.ymin; y <= box_.ymax; ++y) {
      RowResult r = use_kernel_ ? kernel_row(y) : exact_row(y);
      if (r.count > 0) fn(y, r);
    }
  }

 private:
  bool fits_kernel() const {
    const Integer ymax = std::max(abs(box_.ymin), abs(box_.ymax));
    if (abs(box_.xmin) > kernels::kMaxCoef || abs(box_.xmax) > kernels::kMaxCoef) return false;
    for (const auto& e : edges_) {
      if (abs(e.inner_normal.x) > kernels::kMaxCoef) return false;
      if (abs(e.inner_normal.y) * ymax + abs(e.support) > kernels::kMaxOffset) return false;
    }
    return true;
  }

  RowResult kernel_row(const Integer& y) {
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      offset_[k] = (edges_[k].inner_normal.y * y - edges_[k].support).convert_to<std::int64_t>();
    }
    const auto scan = kernels::scan_row(coef_, offset_, box_.xmin.convert_to<std::int32_t>(),
                                        box_.xmax.convert_to<std::int32_t>(), threshold_);
    return {scan.count, scan.first, scan.last};
  }

  RowResult exact_row(const Integer& y) {
    Integer lo = box_.xmin;
    Integer hi = box_.xmax;
    for (const auto& e : edges_) {
      // n.x * x >= rhs
      const Integer rhs = e.support + threshold_ - e.inner_normal.y * y;
      if (e.inner_normal.x > 0) {
        lo = std::max(lo, ceil_div(rhs, e.inner_normal.x));
      } else if (e.inner_normal.x < 0) {
        hi = std::min(hi, floor_div(rhs, e.inner_normal.x));
      } else if (rhs > 0) {
        return {0, 0, 0};
      }
      if (lo > hi) return {0, 0, 0};
    }
    return {hi - lo + 1, lo, hi};
  }

  std::vector<EdgeDatum> edges_;
  Box box_;
  int threshold_;
  bool rows_ok_ = true;
  bool use_kernel_ = false;
  std::vector<std::int32_t> coef_;
  std::vector<std::int64_t> offset_;
};

Integer scan_count(const LatticePolytope& p, int threshold) {
  RowScanner scanner(p, threshold);
  if (!scanner.feasible()) {
    // Too many rows to scan; Pick's formula is exact.
    const Integer b = boundary_point_count(p);
    const Integer interior = (twice_area(p) - b + 2) / 2;
    return threshold > 0 ? interior : interior + b;
  }
  Integer total = 0;
  scanner.for_each_row([&](const Integer&, const RowResult& r) { total += r.count; });
  return total;
}

}  // namespace

Integer boundary_point_count(const LatticePolytope& p) {
  switch (p.dim()) {
    case -1:
      return 0;
    case 0:
      return 1;
    case 1:
      return lattice_length(p) + 1;
    default: {
      Integer b = 0;
      for (const auto& e : edge_data(p)) b += e.lattice_length;
      return b;
    }
  }
}

Integer interior_point_count(const LatticePolytope& p) {
  if (p.dim() < 2) return 0;
  return scan_count(p, 1);
}

Integer lattice_point_count(const LatticePolytope& p) {
  if (p.dim() < 2) return boundary_point_count(p);
  return scan_count(p, 0);
}

std::vector<LatticePoint> interior_row_extremes(const LatticePolytope& p) {
  std::vector<LatticePoint> out;
  if (p.dim() < 2) return out;
  RowScanner scanner(p, 1);
  if (!scanner.feasible()) throw std::length_error("interior_row_extremes: polygon too tall to scan");
  scanner.for_each_row([&](const Integer& y, const RowResult& r) {
    out.emplace_back(r.first, y);
    if (r.last != r.first) out.emplace_back(r.last, y);
  });
  return out;
}

InvariantRecord invariants(const LatticePolytope& p) {
  InvariantRecord r{0, 0, 0, 0, 0, 0, 0};
  if (p.empty()) return r;
  r.v = static_cast<long>(p.num_vertices());
  r.b = boundary_point_count(p);
  if (p.dim() < 2) {
    r.n = r.b;
    return r;
  }
  r.a2 = twice_area(p);
  r.i = interior_point_count(p);
  r.n = r.i + r.b;
  r.d = r.a2;
  r.s = r.i;
  if (r.a2 != 2 * r.i + r.b - 2) {
    throw std::logic_error("invariants: Pick's formula violated for " + compact_string(p));
  }
  if (r.d != r.n + r.s - 2) {
    throw std::logic_error("invariants: d = n + s - 2 violated for " + compact_string(p));
  }
  return r;
}

}  // namespace polyadj
