#pragma once

// Row-scan kernels for lattice-point membership in an intersection of
// half-planes. For a fixed row y every constraint a*x + b*y >= c becomes
// coef[j] * x + offset[j] >= threshold with offset[j] = b*y - c, and the
// kernel tests the consecutive x values of one row.
//
// The scalar kernel is the reference; the AVX2 kernel must agree with it
// bit for bit and is selected at runtime when the CPU supports it.
//
// Range contract (checked by callers, see fits_kernel_range):
//   |coef[j]| <= 2^30, |x| <= 2^30, |offset[j]| <= 2^61, |threshold| <= 2^61.

#include <cstdint>
#include <span>
#include <string_view>

namespace polyadj::kernels {

struct RowScan {
  std::int64_t count = 0;  // number of x in [x_begin, x_end] satisfying all constraints
  std::int32_t first = 0;  // smallest such x (valid when count > 0)
  std::int32_t last = -1;  // largest such x (valid when count > 0)

  friend bool operator==(const RowScan&, const RowScan&) = default;
};

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);

constexpr std::int64_t kMaxCoef = std::int64_t{1} << 30;
constexpr std::int64_t kMaxOffset = std::int64_t{1} << 61;

RowScan scan_row_scalar(std::span<const std::int32_t> coef, std::span<const std::int64_t> offset,
                        std::int32_t x_begin, std::int32_t x_end, std::int64_t threshold);

/// Only callable when avx2_available(); otherwise falls back to scalar.
RowScan scan_row_avx2(std::span<const std::int32_t> coef, std::span<const std::int64_t> offset,
                      std::int32_t x_begin, std::int32_t x_end, std::int64_t threshold);

bool avx2_available();

/// Best backend for this CPU, honoring POLYADJ_FORCE_SCALAR=1 in the environment.
Backend active_backend();

/// Dispatches to the active backend.
RowScan scan_row(std::span<const std::int32_t> coef, std::span<const std::int64_t> offset,
                 std::int32_t x_begin, std::int32_t x_end, std::int64_t threshold);

}  // namespace polyadj::kernels
