#include "mvvd/prime_field.hpp"

#include <array>

#include "mvvd/error.hpp"

namespace mvvd {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t b : bases) {
    std::uint64_t x = powmod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (p_ < 2 || p_ > max_modulus) {
    throw Error(ErrorCode::not_prime, "modulus " + std::to_string(p_) + " outside [2, 2^63)");
  }
  if (!is_prime_u64(p_)) {
    throw Error(ErrorCode::not_prime, "modulus " + std::to_string(p_) + " is not prime");
  }
}

PrimeField PrimeField::from_string(std::string_view text) {
  mpz_class value;
  if (text.empty() || value.set_str(std::string(text), 10) != 0) {
    throw Error(ErrorCode::parse_error, "bad modulus '" + std::string(text) + "'");
  }
  if (value < 2 || !mpz_fits_ulong_p(value.get_mpz_t()) || value.get_ui() > max_modulus) {
    throw Error(ErrorCode::not_prime, "modulus " + std::string(text) + " outside [2, 2^63)");
  }
  return PrimeField(value.get_ui());
}

std::uint64_t PrimeField::reduce(const mpz_class& value) const {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(value.get_mpz_t(), p_);
}

std::uint64_t PrimeField::reduce(long long value) const noexcept {
  auto p = static_cast<__int128>(p_);
  __int128 r = static_cast<__int128>(value) % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::inverse(std::uint64_t a) const {
  if (a % p_ == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero in Z/p");
  return powmod(a, p_ - 2, p_);
}

}  // namespace mvvd
