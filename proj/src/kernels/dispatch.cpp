#include <cstdlib>
#include <string_view>
#include <utility>

#include "mvvd/kernels.hpp"
#include "mvvd/prime_field.hpp"

namespace mvvd::kernels {

#if defined(MVVD_BUILD_AVX2)
const ModpKernels* avx2_kernels_impl();
#endif

const ModpKernels* avx2() {
#if defined(MVVD_BUILD_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? avx2_kernels_impl() : nullptr;
#else
  return nullptr;
#endif
}

const ModpKernels& select(std::uint64_t p) {
  static const bool force_scalar = [] {
    const char* env = std::getenv("MVVD_KERNEL");
    return env != nullptr && std::string_view(env) == "scalar";
  }();
  if (!force_scalar) {
    if (const ModpKernels* k = avx2(); k != nullptr && p <= k->max_modulus) return *k;
  }
  return scalar();
}

std::uint64_t det_modp(std::span<std::uint64_t> a, std::size_t order, std::uint64_t p,
                       const ModpKernels& kernels) {
  if (order == 0) return 1 % p;
  bool negate = false;
  std::uint64_t prev = 1;
  for (std::size_t k = 0; k + 1 < order; ++k) {
    std::uint64_t* pivot_row = a.data() + k * order;
    if (pivot_row[k] == 0) {
      std::size_t i = k + 1;
      while (i < order && a[i * order + k] == 0) ++i;
      if (i == order) return 0;
      std::swap_ranges(pivot_row + k, pivot_row + order, a.data() + i * order + k);
      negate = !negate;
    }
    const std::uint64_t pivot = pivot_row[k];
    const std::uint64_t prev_inv = powmod(prev, p - 2, p);
    const std::uint64_t scale = mulmod(pivot, prev_inv, p);
    for (std::size_t i = k + 1; i < order; ++i) {
      std::uint64_t* row = a.data() + i * order;
      const std::uint64_t factor = mulmod(row[k] == 0 ? 0 : p - row[k], prev_inv, p);
      kernels.combine_rows(row + k + 1, pivot_row + k + 1, order - k - 1, scale, factor, p);
      row[k] = 0;
    }
    prev = pivot;
  }
  std::uint64_t det = a[order * order - 1];
  return negate && det != 0 ? p - det : det;
}

}  // namespace mvvd::kernels
