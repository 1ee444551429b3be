#include "mvvd/ring.hpp"

#include <algorithm>
#include <cctype>

#include "mvvd/error.hpp"

namespace mvvd {

Ring Ring::integers() { return Ring(RingKind::integer, std::nullopt, nullptr); }

Ring Ring::prime_field(PrimeField field) { return Ring(RingKind::prime_field, field, nullptr); }

Ring Ring::polynomials(VariablesPtr vars) {
  if (!vars) throw Error(ErrorCode::invalid_argument, "polynomial ring needs a variable list");
  return Ring(RingKind::polynomial, std::nullopt, std::move(vars));
}

std::string_view Ring::name() const noexcept {
  switch (kind_) {
    case RingKind::integer: return "int";
    case RingKind::prime_field: return "mod_p";
    case RingKind::polynomial: return "poly";
  }
  return "?";
}

const PrimeField& Ring::field() const {
  if (!field_) throw Error(ErrorCode::unsupported_ring, "ring has no modulus");
  return *field_;
}

const VariablesPtr& Ring::variables() const {
  if (kind_ != RingKind::polynomial) throw Error(ErrorCode::unsupported_ring, "ring has no variables");
  return vars_;
}

RingValue Ring::zero() const { return from_int(0); }
RingValue Ring::one() const { return from_int(1); }

RingValue Ring::from_int(long long value) const {
  switch (kind_) {
    case RingKind::integer: return RingValue(mpz_class(static_cast<long>(value)));
    case RingKind::prime_field: return RingValue(ModInt{field_->reduce(value), *field_});
    case RingKind::polynomial: return RingValue(MultiPoly::constant(vars_, static_cast<long>(value)));
  }
  throw Error(ErrorCode::unsupported_ring, "unknown ring");
}

RingValue Ring::from_integer(const mpz_class& value) const {
  switch (kind_) {
    case RingKind::integer: return RingValue(value);
    case RingKind::prime_field: return RingValue(ModInt{field_->reduce(value), *field_});
    case RingKind::polynomial: return RingValue(MultiPoly::constant(vars_, value));
  }
  throw Error(ErrorCode::unsupported_ring, "unknown ring");
}

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  }
  std::size_t digits_from = !trimmed.empty() && (trimmed[0] == '-' || trimmed[0] == '+') ? 1 : 0;
  bool ok = trimmed.size() > digits_from &&
            std::all_of(trimmed.begin() + static_cast<long>(digits_from), trimmed.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  if (!ok) throw Error(ErrorCode::parse_error, "bad integer '" + std::string(text) + "'");
  if (trimmed[0] == '+') trimmed.erase(0, 1);
  return mpz_class(trimmed, 10);
}

}  // namespace

RingValue Ring::parse(std::string_view text) const {
  if (kind_ == RingKind::polynomial) return RingValue(MultiPoly::parse(text, vars_));
  return from_integer(parse_integer(text));
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case RingKind::integer: return true;
    case RingKind::prime_field: return a.field_ == b.field_;
    case RingKind::polynomial: return same_variables(a.vars_, b.vars_);
  }
  return false;
}

Ring RingValue::ring() const {
  switch (kind()) {
    case RingKind::integer: return Ring::integers();
    case RingKind::prime_field: return Ring::prime_field(std::get<ModInt>(v_).field);
    case RingKind::polynomial: return Ring::polynomials(std::get<MultiPoly>(v_).variables());
  }
  throw Error(ErrorCode::unsupported_ring, "unknown ring");
}

bool RingValue::same_ring(const RingValue& other) const {
  if (v_.index() != other.v_.index()) return false;
  switch (kind()) {
    case RingKind::integer: return true;
    case RingKind::prime_field: return std::get<ModInt>(v_).field == std::get<ModInt>(other.v_).field;
    case RingKind::polynomial:
      return same_variables(std::get<MultiPoly>(v_).variables(), std::get<MultiPoly>(other.v_).variables());
  }
  return false;
}

namespace {

void require_same(const RingValue& a, const RingValue& b) {
  if (!a.same_ring(b)) {
    throw Error(ErrorCode::ring_mismatch, std::string("cannot combine ") + std::string(a.ring().name()) +
                                              " and " + std::string(b.ring().name()) + " values");
  }
}

}  // namespace

bool RingValue::is_zero() const noexcept {
  switch (kind()) {
    case RingKind::integer: return sgn(std::get<mpz_class>(v_)) == 0;
    case RingKind::prime_field: return std::get<ModInt>(v_).value == 0;
    case RingKind::polynomial: return std::get<MultiPoly>(v_).is_zero();
  }
  return false;
}

bool RingValue::is_one() const { return *this == ring().one(); }

const mpz_class& RingValue::as_integer() const {
  if (kind() != RingKind::integer) throw Error(ErrorCode::ring_mismatch, "not an integer");
  return std::get<mpz_class>(v_);
}

const ModInt& RingValue::as_mod() const {
  if (kind() != RingKind::prime_field) throw Error(ErrorCode::ring_mismatch, "not a residue");
  return std::get<ModInt>(v_);
}

const MultiPoly& RingValue::as_poly() const {
  if (kind() != RingKind::polynomial) throw Error(ErrorCode::ring_mismatch, "not a polynomial");
  return std::get<MultiPoly>(v_);
}

RingValue RingValue::operator-() const {
  switch (kind()) {
    case RingKind::integer: return RingValue(mpz_class(-std::get<mpz_class>(v_)));
    case RingKind::prime_field: {
      const auto& m = std::get<ModInt>(v_);
      return RingValue(ModInt{m.field.neg(m.value), m.field});
    }
    case RingKind::polynomial: return RingValue(-std::get<MultiPoly>(v_));
  }
  throw Error(ErrorCode::unsupported_ring, "unknown ring");
}

RingValue operator+(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  switch (a.kind()) {
    case RingKind::integer: return RingValue(mpz_class(a.as_integer() + b.as_integer()));
    case RingKind::prime_field: {
      const auto& x = a.as_mod();
      return RingValue(ModInt{x.field.add(x.value, b.as_mod().value), x.field});
    }
    case RingKind::polynomial: return RingValue(a.as_poly() + b.as_poly());
  }
  throw Error(ErrorCode::unsupported_ring, "unknown ring");
}

RingValue operator-(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  switch (a.kind()) {
    case RingKind::integer: return RingValue(mpz_class(a.as_integer() - b.as_integer()));
    case RingKind::prime_field: {
      const auto& x = a.as_mod();
      return RingValue(ModInt{x.field.sub(x.value, b.as_mod().value), x.field});
    }
    case RingKind::polynomial: return RingValue(a.as_poly() - b.as_poly());
  }
  throw Error(ErrorCode::unsupported_ring, "unknown ring");
}

RingValue operator*(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  switch (a.kind()) {
    case RingKind::integer: return RingValue(mpz_class(a.as_integer() * b.as_integer()));
    case RingKind::prime_field: {
      const auto& x = a.as_mod();
      return RingValue(ModInt{x.field.mul(x.value, b.as_mod().value), x.field});
    }
    case RingKind::polynomial: return RingValue(a.as_poly() * b.as_poly());
  }
  throw Error(ErrorCode::unsupported_ring, "unknown ring");
}

RingValue RingValue::pow(unsigned long exponent) const {
  switch (kind()) {
    case RingKind::integer: {
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), as_integer().get_mpz_t(), exponent);
      return RingValue(std::move(r));
    }
    case RingKind::prime_field: {
      const auto& x = as_mod();
      return RingValue(ModInt{powmod(x.value, exponent, x.field.modulus()), x.field});
    }
    case RingKind::polynomial: return RingValue(as_poly().pow(exponent));
  }
  throw Error(ErrorCode::unsupported_ring, "unknown ring");
}

RingValue RingValue::exact_div(const RingValue& divisor) const {
  require_same(*this, divisor);
  switch (kind()) {
    case RingKind::integer: {
      const mpz_class& d = divisor.as_integer();
      if (d == 0) throw Error(ErrorCode::division_by_zero, "integer division by zero");
      if (!mpz_divisible_p(as_integer().get_mpz_t(), d.get_mpz_t())) {
        throw Error(ErrorCode::inexact_division, "integer division leaves a remainder");
      }
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), as_integer().get_mpz_t(), d.get_mpz_t());
      return RingValue(std::move(q));
    }
    case RingKind::prime_field: {
      const auto& x = as_mod();
      return RingValue(ModInt{x.field.mul(x.value, x.field.inverse(divisor.as_mod().value)), x.field});
    }
    case RingKind::polynomial: return RingValue(as_poly().exact_div(divisor.as_poly()));
  }
  throw Error(ErrorCode::unsupported_ring, "unknown ring");
}

bool operator==(const RingValue& a, const RingValue& b) {
  if (!a.same_ring(b)) return false;
  switch (a.kind()) {
    case RingKind::integer: return a.as_integer() == b.as_integer();
    case RingKind::prime_field: return a.as_mod().value == b.as_mod().value;
    case RingKind::polynomial: return a.as_poly() == b.as_poly();
  }
  return false;
}

std::string RingValue::to_string() const {
  switch (kind()) {
    case RingKind::integer: return as_integer().get_str();
    case RingKind::prime_field: return std::to_string(as_mod().value);
    case RingKind::polynomial: return as_poly().to_string();
  }
  return "?";
}

RingValue ring_add(const RingValue& a, const RingValue& b) { return a + b; }
RingValue ring_sub(const RingValue& a, const RingValue& b) { return a - b; }
RingValue ring_mul(const RingValue& a, const RingValue& b) { return a * b; }
RingValue ring_neg(const RingValue& a) { return -a; }

RingValue poly_eval(const MultiPoly& p, std::span<const RingValue> point) {
  if (point.size() != p.variable_count()) {
    throw Error(ErrorCode::shape_violation, "point has " + std::to_string(point.size()) +
                                                " coordinates, polynomial has " +
                                                std::to_string(p.variable_count()) + " variables");
  }
  if (point.empty()) return RingValue(p.constant_term());
  for (const auto& x : point) require_same(point.front(), x);
  const Ring ring = point.front().ring();
  RingValue sum = ring.zero();
  for (std::size_t t = 0; t < p.term_count(); ++t) {
    RingValue term = ring.from_integer(p.coefficient(t));
    auto e = p.exponents(t);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] != 0) term *= point[v].pow(e[v]);
    }
    sum += term;
  }
  return sum;
}

}  // namespace mvvd
