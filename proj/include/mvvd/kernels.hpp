#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Dense Z/p elimination kernels. Each kernel family has a portable scalar
// reference and optional SIMD variants chosen at runtime; all variants must
// produce bit-identical results.
namespace mvvd::kernels {

// y[j] = (a*y[j] + b*x[j]) mod p for j < n. Inputs lie in [0, p).
using CombineRowsFn = void (*)(std::uint64_t* y, const std::uint64_t* x, std::size_t n,
                               std::uint64_t a, std::uint64_t b, std::uint64_t p);

struct ModpKernels {
  const char* name;
  CombineRowsFn combine_rows;
  // Largest modulus the kernel handles exactly.
  std::uint64_t max_modulus;
};

const ModpKernels& scalar();
// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const ModpKernels* avx2();

// Fastest kernel valid for modulus p. Setting MVVD_KERNEL=scalar in the
// environment pins the scalar reference.
const ModpKernels& select(std::uint64_t p);

// Fraction-free (Bareiss) elimination over Z/p on a row-major order x order
// matrix, overwritten in place. Returns the determinant in [0, p).
std::uint64_t det_modp(std::span<std::uint64_t> entries, std::size_t order, std::uint64_t p,
                       const ModpKernels& kernels);

}  // namespace mvvd::kernels
