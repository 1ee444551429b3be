#include <immintrin.h>

#include "mvvd/kernels.hpp"

// Four residues per iteration in double precision. With p < 2^26 both
// products and their sum stay below 2^53, so every step is exact; the
// quotient estimate floor(s / p) is off by at most one and is corrected
// with a compare-and-add.
namespace mvvd::kernels {

namespace {

constexpr std::uint64_t kAvx2MaxModulus = (std::uint64_t{1} << 26) - 1;

// Exact for integers in [0, 2^52).
inline __m256d to_double(__m256i v) {
  const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, magic)), _mm256_set1_pd(4503599627370496.0));
}

inline __m256i to_u64(__m256d v) {
  const __m256d shift = _mm256_set1_pd(4503599627370496.0);
  const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
  return _mm256_xor_si256(_mm256_castpd_si256(_mm256_add_pd(v, shift)), magic);
}

void combine_rows_avx2(std::uint64_t* y, const std::uint64_t* x, std::size_t n, std::uint64_t a,
                       std::uint64_t b, std::uint64_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d ad = _mm256_set1_pd(static_cast<double>(a));
  const __m256d bd = _mm256_set1_pd(static_cast<double>(b));
  const __m256d zero = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d yv = to_double(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + j)));
    __m256d xv = to_double(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + j)));
    __m256d s = _mm256_fmadd_pd(ad, yv, _mm256_mul_pd(bd, xv));
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(s, pinv));
    __m256d r = _mm256_fnmadd_pd(q, pd, s);
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), pd));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pd, _CMP_GE_OQ), pd));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + j), to_u64(r));
  }
  for (; j < n; ++j) y[j] = (a * y[j] + b * x[j]) % p;
}

}  // namespace

const ModpKernels* avx2_kernels_impl() {
  static const ModpKernels k{"avx2", &combine_rows_avx2, kAvx2MaxModulus};
  return &k;
}

}  // namespace mvvd::kernels
