#include "polyadj/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define POLYADJ_HAVE_X86 1
#else
#define POLYADJ_HAVE_X86 0
#endif

namespace polyadj::kernels {

#if POLYADJ_HAVE_X86

namespace {

// Four x values per vector, one 64-bit lane each. _mm256_mul_epi32 uses the
// signed low halves of the lanes, which hold x and coef[j] exactly under the
// range contract, and produces full 64-bit products.
__attribute__((target("avx2,popcnt"))) RowScan scan_avx2_impl(std::span<const std::int32_t> coef,
                                                              std::span<const std::int64_t> offset,
                                                              std::int32_t x_begin, std::int32_t x_end,
                                                              std::int64_t threshold) {
  RowScan out;
  const std::size_t m = coef.size();
  const __m256i lane = _mm256_set_epi64x(3, 2, 1, 0);
  const __m256i bound = _mm256_set1_epi64x(threshold - 1);  // v >= threshold  <=>  v > threshold - 1

  for (std::int64_t x = x_begin; x <= x_end; x += 4) {
    const __m256i xs = _mm256_add_epi64(_mm256_set1_epi64x(x), lane);
    __m256i ok = _mm256_set1_epi64x(-1);
    for (std::size_t j = 0; j < m; ++j) {
      const __m256i prod = _mm256_mul_epi32(xs, _mm256_set1_epi64x(coef[j]));
      const __m256i value = _mm256_add_epi64(prod, _mm256_set1_epi64x(offset[j]));
      ok = _mm256_and_si256(ok, _mm256_cmpgt_epi64(value, bound));
      if (_mm256_testz_si256(ok, ok)) break;
    }
    unsigned bits = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(ok)));
    const std::int64_t remaining = std::int64_t{x_end} - x + 1;
    if (remaining < 4) bits &= (1u << remaining) - 1u;
    if (bits == 0) continue;
    if (out.count == 0) out.first = static_cast<std::int32_t>(x + __builtin_ctz(bits));
    out.last = static_cast<std::int32_t>(x + (31 - __builtin_clz(bits)));
    out.count += __builtin_popcount(bits);
  }
  return out;
}

}  // namespace

bool avx2_available() {
  static const bool available = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return available;
}

RowScan scan_row_avx2(std::span<const std::int32_t> coef, std::span<const std::int64_t> offset,
                      std::int32_t x_begin, std::int32_t x_end, std::int64_t threshold) {
  if (!avx2_available()) return scan_row_scalar(coef, offset, x_begin, x_end, threshold);
  return scan_avx2_impl(coef, offset, x_begin, x_end, threshold);
}

#else

bool avx2_available() { return false; }

RowScan scan_row_avx2(std::span<const std::int32_t> coef, std::span<const std::int64_t> offset,
                      std::int32_t x_begin, std::int32_t x_end, std::int64_t threshold) {
  return scan_row_scalar(coef, offset, x_begin, x_end, threshold);
}

#endif

}  // namespace polyadj::kernels
