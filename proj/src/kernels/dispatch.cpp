#include <cstdlib>
#include <cstring>

#include "polyadj/kernels.hpp"

namespace polyadj::kernels {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

Backend active_backend() {
  static const Backend backend = [] {
    const char* force = std::getenv("POLYADJ_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "1") == 0) return Backend::scalar;
    return avx2_available() ? Backend::avx2 : Backend::scalar;
  }();
  return backend;
}

RowScan scan_row(std::span<const std::int32_t> coef, std::span<const std::int64_t> offset,
                 std::int32_t x_begin, std::int32_t x_end, std::int64_t threshold) {
  if (active_backend() == Backend::avx2) return scan_row_avx2(coef, offset, x_begin, x_end, threshold);
  return scan_row_scalar(coef, offset, x_begin, x_end, threshold);
}

}  // namespace polyadj::kernels
