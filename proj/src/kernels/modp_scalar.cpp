#include "mvvd/kernels.hpp"

namespace mvvd::kernels {

namespace {

void combine_rows_scalar(std::uint64_t* y, const std::uint64_t* x, std::size_t n, std::uint64_t a,
                         std::uint64_t b, std::uint64_t p) {
  for (std::size_t j = 0; j < n; ++j) {
    unsigned __int128 s = static_cast<unsigned __int128>(a) * y[j] + static_cast<unsigned __int128>(b) * x[j];
    y[j] = static_cast<std::uint64_t>(s % p);
  }
}

}  // namespace

const ModpKernels& scalar() {
  static const ModpKernels k{"scalar", &combine_rows_scalar, (std::uint64_t{1} << 63) - 1};
  return k;
}

}  // namespace mvvd::kernels
