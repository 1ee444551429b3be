#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mvvd {

using Variables = std::vector<std::string>;
using VariablesPtr = std::shared_ptr<const Variables>;

// Validates names against [A-Za-z][A-Za-z0-9_]* and rejects duplicates.
VariablesPtr make_variables(std::vector<std::string> names);
bool same_variables(const VariablesPtr& a, const VariablesPtr& b) noexcept;

// Identifiers in a polynomial text, in order of first appearance.
std::vector<std::string> scan_identifiers(std::string_view text);

/// Sparse polynomial over Z in a fixed, ordered list of variables.
///
/// Terms are kept sorted by descending lexicographic order of their exponent
/// vectors (the first variable is the most significant) and no stored
/// coefficient is zero, so equal polynomials have identical term lists.
///
/// Exponent vectors are packed four to a 64-bit word, 16 bits per variable
/// with the top bit of each field reserved as an overflow guard. Individual
/// exponents are therefore limited to `max_exponent`; exceeding it throws
/// `ErrorCode::exponent_overflow`.
class MultiPoly {
 public:
  static constexpr unsigned max_exponent = 0x7FFF;

  explicit MultiPoly(VariablesPtr vars);

  static MultiPoly constant(VariablesPtr vars, const mpz_class& c);
  static MultiPoly variable(VariablesPtr vars, std::size_t index);
  static MultiPoly monomial(VariablesPtr vars, std::span<const unsigned> exponents,
                            const mpz_class& c);
  // Accepts terms in any order, with repeats and zeros; normalizes.
  static MultiPoly from_terms(VariablesPtr vars,
                              std::vector<std::pair<std::vector<unsigned>, mpz_class>> terms);

  const VariablesPtr& variables() const noexcept { return vars_; }
  std::size_t variable_count() const noexcept { return vars_->size(); }
  std::size_t term_count() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept;
  // Constant coefficient (zero if absent).
  mpz_class constant_term() const;

  std::vector<unsigned> exponents(std::size_t term) const;
  const mpz_class& coefficient(std::size_t term) const { return coeffs_[term]; }
  unsigned total_degree() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const mpz_class& c) const;
  MultiPoly pow(unsigned long exponent) const;

  // Quotient r with divisor * r == *this. Throws inexact_division when the
  // leading-term division leaves a remainder, division_by_zero for a zero divisor.
  MultiPoly exact_div(const MultiPoly& divisor) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  // Canonical text, e.g. "x0^2 - 2*x0*x1"; "0" for the zero polynomial.
  std::string to_string() const;
  // Terms joined by +/-; a term is an optional integer coefficient and
  // '*'-separated powers var^k. Unknown variable names are a parse_error.
  static MultiPoly parse(std::string_view text, VariablesPtr vars);

 private:
  std::size_t words() const noexcept { return words_; }
  const std::uint64_t* mono(std::size_t term) const noexcept { return exps_.data() + term * words_; }
  void push_term(const std::uint64_t* m, mpz_class c);
  void require_same_ring(const MultiPoly& other) const;
  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract);

  VariablesPtr vars_;
  std::size_t words_;
  std::vector<std::uint64_t> exps_;
  std::vector<mpz_class> coeffs_;
};

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q);

}  // namespace mvvd
