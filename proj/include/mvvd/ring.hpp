#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "mvvd/multipoly.hpp"
#include "mvvd/prime_field.hpp"

namespace mvvd {

enum class RingKind { integer, prime_field, polynomial };

class RingValue;

// Ring descriptor: Z, Z/p, or Z[variables].
class Ring {
 public:
  static Ring integers();
  static Ring prime_field(PrimeField field = PrimeField{});
  static Ring polynomials(VariablesPtr vars);

  RingKind kind() const noexcept { return kind_; }
  // Short tag used in files and reports: "int", "mod_p" or "poly".
  std::string_view name() const noexcept;
  const PrimeField& field() const;
  const VariablesPtr& variables() const;

  // Every supported ring is an integral domain with exact division.
  bool has_exact_division() const noexcept { return true; }

  RingValue zero() const;
  RingValue one() const;
  RingValue from_int(long long value) const;
  RingValue from_integer(const mpz_class& value) const;
  // Decimal text for int/mod_p, polynomial grammar for poly.
  RingValue parse(std::string_view text) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring(RingKind kind, std::optional<PrimeField> field, VariablesPtr vars)
      : kind_(kind), field_(field), vars_(std::move(vars)) {}

  RingKind kind_;
  std::optional<PrimeField> field_;
  VariablesPtr vars_;
};

// Residue in [0, p) tagged with its field.
struct ModInt {
  std::uint64_t value = 0;
  PrimeField field;

  friend bool operator==(const ModInt&, const ModInt&) = default;
};

/// An element of one of the supported commutative rings. Values are
/// immutable; arithmetic between values of different rings throws
/// `ErrorCode::ring_mismatch`.
class RingValue {
 public:
  explicit RingValue(mpz_class v) : v_(std::move(v)) {}
  explicit RingValue(ModInt v) : v_(v) {}
  explicit RingValue(MultiPoly v) : v_(std::move(v)) {}

  Ring ring() const;
  RingKind kind() const noexcept { return static_cast<RingKind>(v_.index()); }
  bool same_ring(const RingValue& other) const;

  bool is_zero() const noexcept;
  bool is_one() const;

  const mpz_class& as_integer() const;
  const ModInt& as_mod() const;
  const MultiPoly& as_poly() const;

  RingValue operator-() const;
  friend RingValue operator+(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a, const RingValue& b);
  friend RingValue operator*(const RingValue& a, const RingValue& b);
  RingValue& operator+=(const RingValue& b) { return *this = *this + b; }
  RingValue& operator-=(const RingValue& b) { return *this = *this - b; }
  RingValue& operator*=(const RingValue& b) { return *this = *this * b; }

  RingValue pow(unsigned long exponent) const;
  // Quotient q with b*q == a; inexact_division if none exists.
  RingValue exact_div(const RingValue& divisor) const;

  // Structural equality; values of different rings compare unequal.
  friend bool operator==(const RingValue& a, const RingValue& b);

  std::string to_string() const;

 private:
  std::variant<mpz_class, ModInt, MultiPoly> v_;
};

RingValue ring_add(const RingValue& a, const RingValue& b);
RingValue ring_sub(const RingValue& a, const RingValue& b);
RingValue ring_mul(const RingValue& a, const RingValue& b);
RingValue ring_neg(const RingValue& a);

// Substitutes point[k] for the k-th variable. The result lives in the ring
// of the point entries (integers when the polynomial has no variables and
// the point is empty).
RingValue poly_eval(const MultiPoly& p, std::span<const RingValue> point);

}  // namespace mvvd
