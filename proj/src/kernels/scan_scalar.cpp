#include "polyadj/kernels.hpp"

namespace polyadj::kernels {

RowScan scan_row_scalar(std::span<const std::int32_t> coef, std::span<const std::int64_t> offset,
                        std::int32_t x_begin, std::int32_t x_end, std::int64_t threshold) {
  RowScan out;
  const std::size_t m = coef.size();
  for (std::int64_t x = x_begin; x <= x_end; ++x) {
    bool inside = true;
    for (std::size_t j = 0; j < m && inside; ++j) {
      inside = std::int64_t{coef[j]} * x + offset[j] >= threshold;
    }
    if (!inside) continue;
    if (out.count == 0) out.first = static_cast<std::int32_t>(x);
    out.last = static_cast<std::int32_t>(x);
    ++out.count;
  }
  return out;
}

}  // namespace polyadj::kernels
