#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mvvd {

// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n) noexcept;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept;
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept;

// Descriptor of Z/p. The modulus must be prime and below 2^63 so that
// sums of two residues never wrap.
class PrimeField {
 public:
  static constexpr std::uint64_t default_modulus = 1'000'003;
  static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 63) - 1;

  explicit PrimeField(std::uint64_t modulus = default_modulus);
  // Parses a decimal modulus.
  static PrimeField from_string(std::string_view text);

  std::uint64_t modulus() const noexcept { return p_; }

  std::uint64_t reduce(const mpz_class& value) const;
  std::uint64_t reduce(long long value) const noexcept;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return mulmod(a, b, p_); }
  // Throws division_by_zero for a == 0.
  std::uint64_t inverse(std::uint64_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

}  // namespace mvvd
